use thiserror::Error;

use crate::indexing::AliasingTriple;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("element {element} does not belong to group {group}")]
    ForeignElement { element: String, group: String },

    #[error("cannot parse element {text:?}: {reason}")]
    ParseElement { text: String, reason: String },

    #[error("group of order {order} exceeds the enumeration threshold {threshold}")]
    TooLargeToEnumerate { order: u64, threshold: u64 },

    #[error("duplicate element at position {position} of {set}")]
    DuplicateElement { set: char, position: usize },

    #[error("work budget exceeded: {operation} needs {required} steps, budget is {budget}{hint}")]
    BudgetExceeded {
        operation: &'static str,
        required: u128,
        budget: u64,
        hint: &'static str,
    },

    #[error("index ({row},{col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error(
        "instance too large for exhaustive search: {entries} involved entries (limit {limit})"
    )]
    OracleTooLarge { entries: usize, limit: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("certificate has {got} symbols but the instance has {expected} constraints")]
    CertificateLength { expected: usize, got: usize },

    #[error(
        "unsupported group family for closed-form degrees: {0}; supply the degrees explicitly"
    )]
    UnsupportedFamily(String),

    #[error("degree spectrum rejected: {0}")]
    InvalidSpectrum(String),

    #[error("omega solver: {0}")]
    Solver(String),

    #[error("triple does not have the triple product property")]
    NotTpp,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("construction claim violated: {claim} (counterexample {triple})")]
    ClaimViolated {
        claim: String,
        triple: AliasingTriple,
    },

    #[error("construction: {0}")]
    Construction(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
