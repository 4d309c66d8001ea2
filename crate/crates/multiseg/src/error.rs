//! Error type shared by the whole crate.
//!
//! Every fallible operation returns [`Error`]. The [`Error::kind`] string is
//! stable and machine-readable; the CLI prints it in its JSON error envelope
//! and the C ABI maps it to an integer code.

use crate::line::Line;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two values on different cuspidal lines were combined.
    #[error("line mismatch: `{left}` vs `{right}`")]
    LineMismatch { left: Line, right: Line },

    /// Segment endpoints whose difference is not a non-negative integer.
    #[error("segment endpoints {b} .. {e} must differ by a non-negative integer")]
    NonIntegralOrNegativeLength { b: String, e: String },

    /// Union of two segments that is not itself a segment.
    #[error("union of segments is not a segment")]
    UnionNotASegment,

    /// Ring arithmetic between elements expressed in different bases.
    #[error("ring elements are in different bases")]
    BasisMismatch,

    /// A ladder-only operation was applied to a non-ladder multisegment.
    #[error("multisegment is not a ladder: {0}")]
    NotALadder(String),

    /// The ordering closure exceeded its node cap.
    #[error("ordering closure exceeded the cap of {cap} nodes")]
    ClosureTooLarge { cap: usize },

    /// A numeric parameter outside the domain of the requested quantity.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    /// A factor index outside the valid range of the (n, d, k) family.
    #[error("invalid factor index {j}: {reason}")]
    InvalidIndex { j: u32, reason: String },

    /// Input to the conjecture evaluator that is not an (essentially) Speh
    /// multisegment.
    #[error("not a Speh multisegment: {0}")]
    NotSpeh(String),

    /// Two routes that must agree by a proved theorem disagreed; always a bug.
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),

    /// The oracle sweep found a cell where oracle and closed form disagree.
    #[error("oracle/closed-form disagreement: {0}")]
    AgreementFailure(String),

    /// Malformed textual input (exponents, JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),

    /// A file could not be read or written.
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable discriminant, used in JSON output and by the
    /// C ABI error codes.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::LineMismatch { .. } => "LineMismatch",
            Error::NonIntegralOrNegativeLength { .. } => "NonIntegralOrNegativeLength",
            Error::UnionNotASegment => "UnionNotASegment",
            Error::BasisMismatch => "BasisMismatch",
            Error::NotALadder(_) => "NotALadder",
            Error::ClosureTooLarge { .. } => "ClosureTooLarge",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InvalidIndex { .. } => "InvalidIndex",
            Error::NotSpeh(_) => "NotSpeh",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::AgreementFailure(_) => "AgreementFailure",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}
