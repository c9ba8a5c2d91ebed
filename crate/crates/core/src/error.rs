use thiserror::Error;

use crate::fan::ConeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector {vector} is not in the sublattice spanned by the basis")]
    NotInSublattice { vector: String },

    #[error("point set is empty")]
    EmptySet,

    #[error("expected {expected} arguments (the ambient rank), got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("cone generated by {generators} contains a line")]
    NotStronglyConvex { generators: String },

    #[error("not a fan: {reason}")]
    NotAFan { reason: String },

    #[error("unknown cone {0}")]
    UnknownCone(ConeId),

    #[error("vector {vector} lies outside the support of the fan")]
    OutsideSupport { vector: String },

    #[error("not Cartier: {reason}")]
    NotCartier { reason: String },

    #[error("support function does not vanish on cone {cone}; quotient undefined")]
    QuotientUndefined { cone: ConeId },

    #[error("support set is empty")]
    EmptySupport,

    #[error("system degenerates on cone {cone}; no restriction to the orbit")]
    Degenerate { cone: ConeId },

    #[error("invariant violated at cone {cone}: <{character}, {ray}> + psi({ray}) < 0")]
    InvariantViolation {
        cone: ConeId,
        ray: String,
        character: String,
    },

    #[error("{count} systems exceed the subset enumeration cap of {cap}")]
    TooManySystems { count: usize, cap: usize },

    #[error("index set is empty")]
    EmptyIndexSet,

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Variant name, for diagnostics and machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotInSublattice { .. } => "NotInSublattice",
            Error::EmptySet => "EmptySet",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::NotStronglyConvex { .. } => "NotStronglyConvex",
            Error::NotAFan { .. } => "NotAFan",
            Error::UnknownCone(_) => "UnknownCone",
            Error::OutsideSupport { .. } => "OutsideSupport",
            Error::NotCartier { .. } => "NotCartier",
            Error::QuotientUndefined { .. } => "QuotientUndefined",
            Error::EmptySupport => "EmptySupport",
            Error::Degenerate { .. } => "Degenerate",
            Error::InvariantViolation { .. } => "InvariantViolation",
            Error::TooManySystems { .. } => "TooManySystems",
            Error::EmptyIndexSet => "EmptyIndexSet",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
