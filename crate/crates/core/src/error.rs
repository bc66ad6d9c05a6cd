use thiserror::Error;

use crate::inverses::InverseKind;
use crate::scalar::RingKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which linear system of the group-inverse test failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSystem {
    /// `a² x = a`
    Right,
    /// `y a² = a`
    Left,
}

/// Reason a Hermitian-projection candidate was refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjectionReject {
    NotHermitian,
    PaNotZero,
    UNotInvertible,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse scalar {input:?}: {reason}")]
    ParseScalar { input: String, reason: &'static str },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not invertible (no invertible pivot at column {stage})")]
    NotInvertible { stage: usize },

    #[error("linear system has no solution (row {row} is inconsistent)")]
    NoSolution { row: usize },

    #[error("operation {op} is not supported over {ring}")]
    UnsupportedRing { op: &'static str, ring: RingKind },

    #[error("the zero matrix has no full-rank factorization")]
    ZeroMatrix,

    #[error("matrix has no group inverse ({system:?} system unsolvable)")]
    NotGroupInvertible { system: GroupSystem },

    #[error("matrix has no core inverse ({system:?} group system unsolvable)")]
    NotCoreInvertible { system: GroupSystem },

    #[error("matrix has no dual core inverse ({system:?} group system unsolvable)")]
    NotDualCoreInvertible { system: GroupSystem },

    #[error("projection rejected: {0:?}")]
    Reject(ProjectionReject),

    #[error("perturbation rejected: {0:?}")]
    Rejected(SumRejection),

    #[error("inverse kind {0:?} is not valid here")]
    UnsupportedKind(InverseKind),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("invalid document: {0}")]
    Document(String),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }
}

/// Why a perturbation context could not be built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumRejection {
    TauInverseMissing,
    OnePlusPhiTauEtaNotInvertible,
}
