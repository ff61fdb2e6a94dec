use std::fmt;

use thiserror::Error;

/// Why a base point fails to be adapted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotAdaptedReason {
    /// `p + h_z` is a proper subspace of `g`.
    NoOpenOrbit,
    /// `a ∩ h_z^⊥` holds no element positive on the candidate `Σ(Q)`.
    NoRegularElement,
    /// The semisimple part of the candidate Levi is not inside `h_z`.
    LeviNotContained,
}

impl fmt::Display for NotAdaptedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotAdaptedReason::NoOpenOrbit => "no open P-orbit",
            NotAdaptedReason::NoRegularElement => "no regular element in a ∩ h_z^⊥",
            NotAdaptedReason::LeviNotContained => "l_Q,nc not contained in h_z",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("invalid Cartan matrix: {0}")]
    Cartan(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("not adapted at this point: {0}")]
    NotAdapted(NotAdaptedReason),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
