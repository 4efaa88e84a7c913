//! Look-and-say sequences, their repeat-k variants, and the piece morphisms
//! connecting them.
//!
//! Terms are kept in canonical run-length form ([`Word`]) so that stepping
//! costs time proportional to the number of runs, not the number of digits;
//! that is what makes the growth-ratio experiments cheap even when terms
//! reach millions of digits. On top of the generator sit machine checks for
//! the structural claims about the doubled ("look and say again") variant:
//! digit/count closure, seed-independent prefixes, the commuting piece
//! square, and trajectory conjugacy.

pub mod analysis;
pub mod generator;
pub mod morphism;
pub mod report;
pub mod rle;

pub use analysis::{
    audit_digits, check_shared_prefix, length_sequence, ratio_series, AnalysisError,
    ConvergenceSummary, DigitAudit, RatioSeries, Violation, CLOSURE_COUNTS, CLOSURE_DIGITS,
    CONWAY_LAMBDA,
};
pub use generator::{generate, step, GenerateError, RepeatFactor, Trajectory};
pub use morphism::{
    eta, kappa, read_classical, read_repeat, verify_commutation, verify_commutation_exhaustive,
    verify_conjugacy, MorphismError, MorphismFactor,
};
pub use report::{Failure, Report};
pub use rle::{Digit, Piece, Word, WordBuilder, WordError};
