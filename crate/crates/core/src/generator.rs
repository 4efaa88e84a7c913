//! The look-and-say step generalized to a repeat factor, and trajectories.
//!
//! Stepping works piece-to-pieces on the run-length form: each piece `a^n`
//! contributes the count digit `n` written k times, then `a` written k
//! times, merged across emitted boundaries. The digit string is never
//! materialized, which keeps late terms cheap (their expanded length grows
//! geometrically while the piece list stays proportional).

use std::fmt;

use thiserror::Error;

use crate::rle::{Word, WordBuilder, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("repeat factor {0} is outside 1..=4")]
    InvalidFactor(u8),
    #[error("seed must be a non-empty word")]
    EmptySeed,
    #[error("a trajectory needs at least one term")]
    ZeroTerms,
    #[error("producing term {index} failed: {source}")]
    Step { index: usize, source: WordError },
}

/// How many times each read-off digit is written: 1 is the classical step,
/// 2 the doubled variant, 3 the tripled one. 4 is admitted only so the
/// breakdown of the piece-count regime can be demonstrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RepeatFactor(u8);

impl RepeatFactor {
    pub const CLASSICAL: RepeatFactor = RepeatFactor(1);
    pub const DOUBLE: RepeatFactor = RepeatFactor(2);
    pub const TRIPLE: RepeatFactor = RepeatFactor(3);
    pub const QUADRUPLE: RepeatFactor = RepeatFactor(4);

    pub fn new(k: u8) -> Result<Self, GenerateError> {
        if (1..=4).contains(&k) {
            Ok(RepeatFactor(k))
        } else {
            Err(GenerateError::InvalidFactor(k))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Display for RepeatFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One read-off step at repeat factor k.
///
/// Equals encoding the digit string obtained by writing, for each run of the
/// expanded term, its length k times then its digit k times. A merged run
/// can reach 3k, so factors up to 3 always fit a one-digit count while
/// factor 4 can fail on seeds that line up three merges.
pub fn step(term: &Word, k: RepeatFactor) -> Result<Word, WordError> {
    if term.is_empty() {
        return Err(WordError::Empty);
    }
    let mut out = WordBuilder::with_capacity(2 * term.piece_count());
    for piece in term.pieces() {
        out.push(piece.count_digit(), k.get())?;
        out.push(piece.digit(), k.get())?;
    }
    Ok(out.finish())
}

/// A seed and every term reached from it by iterating [`step`] at one factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    k: RepeatFactor,
    terms: Vec<Word>,
}

impl Trajectory {
    pub fn k(&self) -> RepeatFactor {
        self.k
    }

    pub fn seed(&self) -> &Word {
        &self.terms[0]
    }

    pub fn terms(&self) -> &[Word] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> &Word {
        &self.terms[n]
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Digit length of every term, in order.
    pub fn digit_lengths(&self) -> Vec<u64> {
        self.terms.iter().map(Word::digit_len).collect()
    }
}

/// Iterate [`step`] from a seed, keeping every term including the seed.
pub fn generate(seed: &Word, k: RepeatFactor, n_terms: usize) -> Result<Trajectory, GenerateError> {
    if seed.is_empty() {
        return Err(GenerateError::EmptySeed);
    }
    if n_terms == 0 {
        return Err(GenerateError::ZeroTerms);
    }
    let mut terms = Vec::with_capacity(n_terms);
    terms.push(seed.clone());
    for index in 1..n_terms {
        let next =
            step(&terms[index - 1], k).map_err(|source| GenerateError::Step { index, source })?;
        terms.push(next);
    }
    Ok(Trajectory { k, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rle::Digit;
    use proptest::prelude::*;

    fn w(text: &str) -> Word {
        Word::encode(text).unwrap()
    }

    fn k(v: u8) -> RepeatFactor {
        RepeatFactor::new(v).unwrap()
    }

    #[test]
    fn single_steps() {
        assert_eq!(step(&w("1"), k(2)).unwrap(), w("1111"));
        assert_eq!(step(&w("4411"), k(2)).unwrap(), w("22442211"));
        assert_eq!(step(&w("1211"), k(1)).unwrap(), w("111221"));
        assert_eq!(step(&w("1"), k(3)).unwrap(), w("111111"));
        assert_eq!(step(&Word::empty(), k(2)), Err(WordError::Empty));
    }

    #[test]
    fn doubled_trajectories_match_worked_terms() {
        let from_two = generate(&w("2"), k(2), 4).unwrap();
        let expected: Vec<Word> = ["2", "1122", "22112222", "222222114422"]
            .iter()
            .map(|t| w(t))
            .collect();
        assert_eq!(from_two.terms(), expected.as_slice());

        let from_seven = generate(&w("7"), k(2), 4).unwrap();
        let expected: Vec<Word> = ["7", "1177", "22112277", "2222221122222277"]
            .iter()
            .map(|t| w(t))
            .collect();
        assert_eq!(from_seven.terms(), expected.as_slice());
    }

    #[test]
    fn classical_trajectory_from_one() {
        let trajectory = generate(&w("1"), RepeatFactor::CLASSICAL, 6).unwrap();
        let expected: Vec<Word> = ["1", "11", "21", "1211", "111221", "312211"]
            .iter()
            .map(|t| w(t))
            .collect();
        assert_eq!(trajectory.terms(), expected.as_slice());
        assert_eq!(trajectory.seed(), &w("1"));
        assert_eq!(trajectory.k(), RepeatFactor::CLASSICAL);
    }

    #[test]
    fn classical_digits_stay_bounded_by_seed() {
        // from a single digit the classical sequence only ever uses
        // 1, 2, 3 plus the seed itself
        for seed in 0u8..10 {
            let seed_word =
                Word::from(crate::rle::Piece::new(Digit::new(seed).unwrap(), 1).unwrap());
            let trajectory = generate(&seed_word, RepeatFactor::CLASSICAL, 25).unwrap();
            let bound = seed.max(3);
            for term in trajectory.terms() {
                for piece in term.pieces() {
                    assert!(piece.digit().value() <= bound, "seed {seed}: {piece}");
                }
            }
        }
    }

    #[test]
    fn generate_rejects_degenerate_input() {
        assert_eq!(
            generate(&Word::empty(), k(2), 3),
            Err(GenerateError::EmptySeed)
        );
        assert_eq!(generate(&w("1"), k(2), 0), Err(GenerateError::ZeroTerms));
        assert_eq!(RepeatFactor::new(0), Err(GenerateError::InvalidFactor(0)));
        assert_eq!(RepeatFactor::new(5), Err(GenerateError::InvalidFactor(5)));
    }

    #[test]
    fn quadruple_factor_overflows_on_lined_up_merges() {
        // 7 -> 11117777 -> 4444111144447777 -> next term opens with a run of
        // twelve 4s, which no single-digit count can hold
        let err = generate(&w("7"), RepeatFactor::QUADRUPLE, 5).unwrap_err();
        match err {
            GenerateError::Step { index, source } => {
                assert_eq!(index, 3);
                assert!(matches!(source, WordError::RunTooLong { len: 12, .. }));
            }
            other => panic!("expected a step failure, got {other}"),
        }
    }

    fn small_word() -> impl Strategy<Value = Word> {
        (
            (0u8..10, 1u8..10),
            proptest::collection::vec((1u8..10, 1u8..10), 0..8),
        )
            .prop_map(|((first_digit, first_count), steps)| {
                let mut digit = first_digit;
                let mut pieces =
                    vec![crate::rle::Piece::new(Digit::new(digit).unwrap(), first_count).unwrap()];
                for (delta, count) in steps {
                    digit = (digit + delta) % 10;
                    pieces.push(crate::rle::Piece::new(Digit::new(digit).unwrap(), count).unwrap());
                }
                Word::from_pieces(pieces).unwrap()
            })
    }

    proptest! {
        #[test]
        fn step_length_law(word in small_word(), factor in 1u8..=3) {
            // the step writes 2k digits per input piece
            let next = step(&word, k(factor)).unwrap();
            let expected = 2 * u64::from(factor) * word.piece_count() as u64;
            prop_assert_eq!(next.digit_len(), expected);
            prop_assert_eq!(next.decode().len() as u64, expected);
        }
    }
}
