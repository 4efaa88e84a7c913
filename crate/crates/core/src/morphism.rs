//! Piece-level maps linking classical and repeat-k sequences.
//!
//! `kappa` rescales digits, `eta` lifts it to whole words, and the read-off
//! maps describe one generator step restricted to a single piece. The square
//! they form commutes: relabelling a piece and then reading it off equals
//! reading it off classically and then relabelling. That identity is what
//! transports classical trajectories onto their repeat-k counterparts, and
//! both facts are checked here rather than assumed.

use std::fmt;

use thiserror::Error;

use crate::generator::{generate, GenerateError, RepeatFactor};
use crate::report::Report;
use crate::rle::{Digit, Piece, Word, WordBuilder, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("morphism factor {0} is outside 2..=3")]
    InvalidFactor(u8),
    #[error("kappa sends digit {digit} to {product} at factor {k}, which is not a digit")]
    KappaNotADigit { digit: Digit, k: u8, product: u8 },
    #[error("piece {index} ({piece}) has a digit outside 1..=3 but is not the final piece")]
    NonClassicalDigit { index: usize, piece: Piece },
    #[error("count {count} scales to {product} at factor {k}, past the one-digit limit")]
    CountOverflow { count: u8, k: u8, product: u8 },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
}

/// Factor for `kappa`/`eta`. Only 2 and 3 keep every kappa image inside the
/// digits; 4 already sends 3 to 12.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MorphismFactor(u8);

impl MorphismFactor {
    pub const DOUBLE: MorphismFactor = MorphismFactor(2);
    pub const TRIPLE: MorphismFactor = MorphismFactor(3);

    pub fn new(k: u8) -> Result<Self, MorphismError> {
        if (2..=3).contains(&k) {
            Ok(MorphismFactor(k))
        } else {
            Err(MorphismError::InvalidFactor(k))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn repeat_factor(self) -> RepeatFactor {
        RepeatFactor::new(self.0).expect("2 and 3 are valid repeat factors")
    }
}

impl fmt::Display for MorphismFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Repeat-k read-off of one piece: `a^b` becomes `b^k a^k`, merged to
/// `a^{2k}` when the count digit equals the run digit.
pub fn read_repeat(piece: Piece, k: RepeatFactor) -> Word {
    let mut builder = WordBuilder::new();
    builder
        .push(piece.count_digit(), k.get())
        .expect("a merged pair of k-runs stays at 2k <= 8");
    builder
        .push(piece.digit(), k.get())
        .expect("a merged pair of k-runs stays at 2k <= 8");
    builder.finish()
}

/// Classical read-off of one piece: `a^b` becomes the word `ba`.
pub fn read_classical(piece: Piece) -> Word {
    read_repeat(piece, RepeatFactor::CLASSICAL)
}

fn kappa_at(digit: Digit, k: u8) -> Result<Digit, MorphismError> {
    match digit.value() {
        v @ 1..=3 => {
            let product = k * v;
            Digit::new(product).map_err(|_| MorphismError::KappaNotADigit { digit, k, product })
        }
        _ => Ok(Digit::new(1).expect("1 is a digit")),
    }
}

/// The digit map: 1, 2, 3 scale by the factor, every other digit collapses
/// to 1.
pub fn kappa(digit: Digit, k: MorphismFactor) -> Digit {
    kappa_at(digit, k.get()).expect("factors 2 and 3 keep kappa within the digits")
}

fn eta_at(word: &Word, k: u8) -> Result<Word, MorphismError> {
    let last = word.piece_count().saturating_sub(1);
    let mut pieces = Vec::with_capacity(word.piece_count());
    for (index, piece) in word.pieces().iter().enumerate() {
        if !(1..=3).contains(&piece.digit().value()) && index != last {
            return Err(MorphismError::NonClassicalDigit {
                index,
                piece: *piece,
            });
        }
        let product = k * piece.count();
        if product > 9 {
            return Err(MorphismError::CountOverflow {
                count: piece.count(),
                k,
                product,
            });
        }
        pieces.push(Piece::new(kappa_at(piece.digit(), k)?, product)?);
    }
    // kappa is injective on 1..=3 and only the final piece may map to 1, so
    // adjacent images stay distinct; from_pieces still verifies that.
    Ok(Word::from_pieces(pieces)?)
}

/// Word-level lift of `kappa`: every piece `a^b` maps to `kappa(a)^{k·b}`.
///
/// Digits outside 1..=3 are only admitted in the final piece, which is the
/// one place a classical trajectory keeps its seed digit. Each scaled count
/// must stay a single digit.
pub fn eta(word: &Word, k: MorphismFactor) -> Result<Word, MorphismError> {
    eta_at(word, k.get())
}

/// Check, on one piece, that relabelling then reading equals reading
/// classically then relabelling, and that both match the closed form
/// `kappa(b)^k kappa(a)^k`.
///
/// Factors 2 and 3 satisfy the identity whenever the scaled count fits a
/// digit; factor 4 breaks on digit or count 3, and the report carries the
/// offending kappa application instead of panicking.
pub fn verify_commutation(piece: Piece, k: RepeatFactor) -> Report {
    let mut report = Report::new(format!("commutation of {piece} at k={k}"), 1);

    let read_then_relabel = eta_at(&read_classical(piece), k.get());
    let relabel_then_read =
        eta_at(&Word::from(piece), k.get()).map(|image| read_repeat(image.pieces()[0], k));
    let closed_form = kappa_at(piece.count_digit(), k.get()).and_then(|count_image| {
        let digit_image = kappa_at(piece.digit(), k.get())?;
        let mut builder = WordBuilder::new();
        builder.push(count_image, k.get())?;
        builder.push(digit_image, k.get())?;
        Ok(builder.finish())
    });

    match (read_then_relabel, relabel_then_read, closed_form) {
        (Ok(lhs), Ok(rhs), Ok(expected)) => {
            if lhs != rhs || lhs != expected {
                report.add_failure(
                    piece.to_string(),
                    format!(
                        "read-then-relabel gives {lhs}, relabel-then-read gives {rhs}, \
                         closed form is {expected}"
                    ),
                );
            }
        }
        (Err(err), _, _) | (_, Err(err), _) | (_, _, Err(err)) => {
            report.add_failure(piece.to_string(), err.to_string());
        }
    }
    report
}

/// Run [`verify_commutation`] over all nine pieces with digit and count in
/// 1..=3.
pub fn verify_commutation_exhaustive(k: RepeatFactor) -> Report {
    let mut report = Report::new(
        format!("commutation over the 9 pieces with digit and count in 1..=3 at k={k}"),
        9,
    );
    for digit in 1u8..=3 {
        for count in 1u8..=3 {
            let piece = Piece::new(Digit::new(digit).expect("digit in range"), count)
                .expect("count in range");
            let sub = verify_commutation(piece, k);
            for failure in sub.failures() {
                report.add_failure(failure.case.clone(), failure.detail.clone());
            }
        }
    }
    report
}

/// Check that `eta` carries the classical trajectory of `seed`, term by
/// term, onto the repeat-k trajectory started from `eta(seed)`. Reports the
/// first mismatching term, if any.
pub fn verify_conjugacy(
    seed: &Word,
    k: MorphismFactor,
    n_terms: usize,
) -> Result<Report, MorphismError> {
    let classical = generate(seed, RepeatFactor::CLASSICAL, n_terms)?;
    let image_seed = eta(seed, k)?;
    let repeated = generate(&image_seed, k.repeat_factor(), n_terms)?;

    let mut report = Report::new(
        format!("conjugacy of seed {seed} at k={k} over {n_terms} terms"),
        n_terms,
    );
    for n in 0..n_terms {
        let mapped = eta(classical.term(n), k)?;
        if &mapped != repeated.term(n) {
            report.add_failure(
                format!("term {n}"),
                format!(
                    "relabelled classical term is {mapped}, generated term is {}",
                    repeated.term(n)
                ),
            );
            break;
        }
    }
    Ok(report)
}
