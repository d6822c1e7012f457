//! Crate-wide error type.
//!
//! Every fallible operation in the engine reports one of these variants.
//! Arithmetic that cannot fail (addition of Laurent polynomials, products
//! of scalars) returns plain values instead.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact polynomial division was requested but no exact quotient exists.
    #[error("no exact quotient: {0}")]
    NotDivisible(String),

    /// A denominator vanished, either formally or at a numeric evaluation point.
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    /// Addition of two scalars whose radical parts differ. Each matrix entry
    /// carries exactly one radical prefactor, so this always signals a logic
    /// bug in the caller rather than a representable value.
    #[error("cannot add scalars with distinct radical parts")]
    RadicalMismatch,

    /// Two operands were built over algebras of different size N.
    #[error("operands live over different N: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },

    /// `reorder_pair` was called on a pair that is already in normal order.
    #[error("pair u{},{} u{},{} is already in normal order", .0.0, .0.1, .1.0, .1.1)]
    InternalOrderError((u8, u8), (u8, u8)),

    /// A precondition on the arguments was violated.
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),

    /// Quantum minors require row and column index sets of equal size.
    #[error("index sets have different sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// A multi-index had the wrong length or degree for the requested map.
    #[error("invalid multi-index: {0}")]
    InvalidMultiIndex(String),

    /// A half-integer corepresentation index fell outside {-l, ..., l}.
    #[error("corepresentation index out of range: {0}")]
    IndexOutOfRange(String),

    /// The normalized right- and left-derived corepresentation matrices
    /// disagree. The renormalized basis is supposed to make them coincide,
    /// so this indicates a normalization or ordering bug.
    #[error("right- and left-derived matrices differ at entry (r_twice={r}, s_twice={s})")]
    MatchFailure { r: i64, s: i64 },

    /// Cache or output I/O failure.
    #[error("i/o error: {0}")]
    Io(String),

    /// A serialized matrix could not be parsed back.
    #[error("malformed serialized matrix: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
