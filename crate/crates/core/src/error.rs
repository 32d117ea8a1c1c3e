//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by parsing, validation, specialization and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
    /// A braid word that does not fit its strand count.
    #[error("invalid braid: {0}")]
    InvalidBraid(String),
    /// A level or colour below the minimum of 2.
    #[error("level must be at least 2, got {0}")]
    Level(usize),
    /// A multi-index outside the state set of its level.
    #[error("multi-index {index:?} is outside the state set at level {level}")]
    IndexOutOfRange { index: Vec<usize>, level: usize },
    /// A colour vector whose length does not match the component count.
    #[error("colour vector has {got} entries but the link has {expected} components")]
    ColourMismatch { expected: usize, got: usize },
    /// A specialization asked to invert an element that is not a unit.
    #[error("image of {0} is not invertible but a negative power was requested")]
    NonInvertible(String),
    /// A specialization applied to a polynomial containing an unmapped variable.
    #[error("variable {0} has no image under this specialization")]
    Unmapped(String),
    /// Consecutive levels of a universal sequence failed to project onto each other.
    #[error("coherence failure: level {upper} does not project onto level {lower}")]
    Coherence { lower: usize, upper: usize },
    /// A division that was required to be exact left a remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
