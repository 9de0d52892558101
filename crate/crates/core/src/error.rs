//! Error type shared by all modules.

use std::fmt;

/// Errors raised by the exact-arithmetic and search layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Exact division by q was requested on a polynomial with nonzero
    /// constant term. Reaching this from the half-relation builder means
    /// a structural invariant was violated, i.e. a bug.
    Divisibility,
    /// q = 0 where the construction divides by q.
    ZeroQ,
    /// An argument required to be a nonzero integer was zero.
    ZeroArg,
    /// A tuple entry was zero.
    ZeroEntry,
    /// A tuple must have at least one entry.
    EmptyTuple,
    /// A tuple of a specific length was expected.
    WrongLength { expected: usize, got: usize },
    /// The tuple is not a half-relation for the given q.
    NotAHalfRelation,
    /// A certificate failed re-verification. Never expected; indicates a
    /// broken convention or a bug, so it is surfaced loudly.
    CertificateFailure(&'static str),
    /// Pell fundamental solution requested for a perfect square.
    SquareInput,
    /// The quadratic in q degenerates (leading coefficient zero).
    DegenerateQuadratic,
    /// A denominator in a closed-form limit was zero.
    ZeroDenominator,
    /// The root limit is not real (negative radicand).
    NegativeAlpha,
    /// Sequence index below the first admissible value.
    IndexTooSmall,
    /// Family parameters outside the proposition's range.
    BadParams(String),
    /// A digit is not valid in the requested base.
    BadDigit(char),
    /// A rational could not be parsed.
    ParseRat(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Divisibility => write!(f, "polynomial is not divisible by q"),
            Error::ZeroQ => write!(f, "q must be nonzero"),
            Error::ZeroArg => write!(f, "argument must be nonzero"),
            Error::ZeroEntry => write!(f, "tuple entries must be nonzero"),
            Error::EmptyTuple => write!(f, "tuple must be nonempty"),
            Error::WrongLength { expected, got } => {
                write!(f, "expected tuple of length {expected}, got {got}")
            }
            Error::NotAHalfRelation => write!(f, "tuple is not a half-relation for q"),
            Error::CertificateFailure(what) => write!(f, "certificate verification failed: {what}"),
            Error::SquareInput => write!(f, "d must be a positive nonsquare"),
            Error::DegenerateQuadratic => {
                write!(f, "quadratic degenerates: leading coefficient is zero")
            }
            Error::ZeroDenominator => write!(f, "denominator is zero"),
            Error::NegativeAlpha => write!(f, "limit is not real: negative radicand"),
            Error::IndexTooSmall => write!(f, "index too small for this family"),
            Error::BadParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::BadDigit(c) => write!(f, "invalid digit '{c}' for this base"),
            Error::ParseRat(s) => write!(f, "cannot parse rational from \"{s}\""),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
