//! Digits, pieces, and canonical run-length words.
//!
//! A word is the run-length form of a digit string: a list of pieces `a^b`
//! (digit `a` repeated `b` times) where adjacent pieces carry distinct digits
//! and every count is a single decimal digit. Counts are read off as one
//! digit by the generator, so a run of ten or more is a hard error rather
//! than a two-digit read-off.

use std::fmt;

use thiserror::Error;

/// Errors raised while building digits, pieces, or words.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("{0} is not a decimal digit")]
    InvalidDigit(u8),
    #[error("'{0}' is not a decimal digit")]
    NonDigit(char),
    #[error("empty word")]
    Empty,
    #[error("count {0} is outside 1..=9")]
    InvalidCount(u8),
    #[error("run of digit {digit} reaches length {len}; counts must stay single decimal digits")]
    RunTooLong { digit: Digit, len: usize },
    #[error("pieces {index} and {} carry the same digit", .index + 1)]
    NotCanonical { index: usize },
    #[error("total digit length overflows a 64-bit counter")]
    LengthOverflow,
}

/// A base-10 symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digit(u8);

impl Digit {
    pub fn new(value: u8) -> Result<Self, WordError> {
        if value <= 9 {
            Ok(Digit(value))
        } else {
            Err(WordError::InvalidDigit(value))
        }
    }

    pub fn from_char(c: char) -> Result<Self, WordError> {
        match c.to_digit(10) {
            Some(v) => Ok(Digit(v as u8)),
            None => Err(WordError::NonDigit(c)),
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn to_char(self) -> char {
        (b'0' + self.0) as char
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One maximal run: a digit repeated `count` times, with `1 <= count <= 9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Piece {
    digit: Digit,
    count: u8,
}

impl Piece {
    pub fn new(digit: Digit, count: u8) -> Result<Self, WordError> {
        if (1..=9).contains(&count) {
            Ok(Piece { digit, count })
        } else {
            Err(WordError::InvalidCount(count))
        }
    }

    pub fn digit(self) -> Digit {
        self.digit
    }

    pub fn count(self) -> u8 {
        self.count
    }

    /// The count read off as a digit (counts are single decimal digits).
    pub fn count_digit(self) -> Digit {
        Digit(self.count)
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.digit, self.count)
    }
}

/// A canonical run-length word: adjacent pieces carry distinct digits.
///
/// The empty word exists as the identity for concatenation; seeds and terms
/// reject it at their own boundaries. Words are immutable once built, so they
/// are safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pieces: Vec<Piece>,
    len: u64,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            pieces: Vec::new(),
            len: 0,
        }
    }

    /// Build a word from explicit pieces, rejecting adjacent equal digits.
    pub fn from_pieces(pieces: Vec<Piece>) -> Result<Self, WordError> {
        for (index, pair) in pieces.windows(2).enumerate() {
            if pair[0].digit() == pair[1].digit() {
                return Err(WordError::NotCanonical { index });
            }
        }
        let mut len: u64 = 0;
        for piece in &pieces {
            len = len
                .checked_add(u64::from(piece.count()))
                .ok_or(WordError::LengthOverflow)?;
        }
        Ok(Word { pieces, len })
    }

    /// Run-length encode a digit string.
    pub fn encode(text: &str) -> Result<Self, WordError> {
        if text.is_empty() {
            return Err(WordError::Empty);
        }
        let mut builder = WordBuilder::new();
        for c in text.chars() {
            builder.push(Digit::from_char(c)?, 1)?;
        }
        Ok(builder.finish())
    }

    /// Expand back to the digit string this word represents.
    pub fn decode(&self) -> String {
        let mut out = String::with_capacity(self.len as usize);
        for piece in &self.pieces {
            for _ in 0..piece.count() {
                out.push(piece.digit().to_char());
            }
        }
        out
    }

    /// Concatenate two canonical words, merging the boundary runs when their
    /// digits match. Errors if the merged run leaves the single-digit regime.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        let mut builder = WordBuilder::with_capacity(self.pieces.len() + other.pieces.len());
        for piece in self.pieces.iter().chain(other.pieces.iter()) {
            builder.push_piece(*piece)?;
        }
        Ok(builder.finish())
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    /// Number of digits in the expanded string.
    pub fn digit_len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

impl From<Piece> for Word {
    fn from(piece: Piece) -> Self {
        Word {
            pieces: vec![piece],
            len: u64::from(piece.count()),
        }
    }
}

impl fmt::Display for Word {
    /// Run-length notation, e.g. `1^1 2^1 1^2` for the string `1211`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, piece) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{piece}")?;
        }
        Ok(())
    }
}

/// Builds canonical words left to right, merging runs at the boundary.
#[derive(Debug, Default)]
pub struct WordBuilder {
    pieces: Vec<Piece>,
    len: u64,
}

impl WordBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(pieces: usize) -> Self {
        WordBuilder {
            pieces: Vec::with_capacity(pieces),
            len: 0,
        }
    }

    /// Append `count` copies of `digit`, merging with the trailing run when
    /// the digits match. The merged run must stay within a one-digit count.
    pub fn push(&mut self, digit: Digit, count: u8) -> Result<(), WordError> {
        if count == 0 || count > 9 {
            return Err(WordError::InvalidCount(count));
        }
        self.len = self
            .len
            .checked_add(u64::from(count))
            .ok_or(WordError::LengthOverflow)?;
        if let Some(last) = self.pieces.last_mut() {
            if last.digit() == digit {
                let merged = last.count() + count;
                if merged > 9 {
                    return Err(WordError::RunTooLong {
                        digit,
                        len: usize::from(merged),
                    });
                }
                *last = Piece {
                    digit,
                    count: merged,
                };
                return Ok(());
            }
        }
        self.pieces.push(Piece { digit, count });
        Ok(())
    }

    pub fn push_piece(&mut self, piece: Piece) -> Result<(), WordError> {
        self.push(piece.digit(), piece.count())
    }

    pub fn finish(self) -> Word {
        Word {
            pieces: self.pieces,
            len: self.len,
        }
    }
}
