use thiserror::Error;

use crate::axioms::AxiomReport;
use crate::point::{Index, LatticePoint};

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("effective domain is empty")]
    EmptyDomain,

    #[error("point set is empty")]
    EmptySet,

    #[error("point {0} is not in the effective domain")]
    NotInDomain(LatticePoint),

    #[error("effective domain is not contained in the box: {0} lies outside")]
    DomainOutsideBox(LatticePoint),

    #[error("{0}")]
    Precondition(String),

    #[error("axiom precondition failed: {} does not hold", .0.axiom)]
    AxiomFailed(Box<AxiomReport>),

    #[error("strict mode needs a tabulated function")]
    StrictNeedsTable,

    #[error("no point of the set lies in the peeled box (coordinate {coordinate} is empty)")]
    PeelEmpty { coordinate: Index },

    #[error("cut at {0} left no candidates")]
    EmptyCandidateSet(LatticePoint),

    #[error("table size {size} exceeds the limit {limit}")]
    SizeLimit { size: u128, limit: u128 },

    #[error("value remap is not strictly increasing on the value set: {0}")]
    NonMonotone(String),

    #[error("invalid value {0:?}")]
    InvalidValue(String),

    #[error("function file: {0}")]
    Format(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
