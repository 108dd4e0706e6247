use thiserror::Error;

/// Everything that can go wrong when building or querying cube objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {dim} is outside the supported range 1..={max}")]
    DimensionOutOfRange { dim: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("mask {mask:#x} does not fit dimension {dim}")]
    MaskOutOfRange { mask: u64, dim: usize },

    #[error("element {element} is outside 1..={dim}")]
    ElementOutOfRange { element: u64, dim: usize },

    #[error("coordinate {i} is outside 1..={dim}")]
    CoordinateOutOfRange { i: usize, dim: usize },

    #[error("count {count} is outside {min}..={max}")]
    CountOutOfRange { count: u128, min: u128, max: u128 },

    #[error("family is not level-homogeneous: expected sets of size {expected}, found {witness:?}")]
    NotLevelHomogeneous { expected: usize, witness: Vec<usize> },

    /// A named precondition failed; `witness` is a vertex (as a 1-based element list) showing it.
    #[error("precondition violated: {condition}{}", witness_suffix(.witness))]
    Precondition {
        condition: String,
        witness: Option<Vec<usize>>,
    },

    #[error("instance too large for exhaustive sweep: {free} free vertices (limit {max})")]
    InstanceTooLarge { free: usize, max: usize },

    #[error("numerical solver failed: {0}")]
    NoConvergence(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("neither compression reduces the boundary at coordinate {i} (before {before}, C {after_c}, D {after_d})")]
    LemmaViolation {
        i: usize,
        before: usize,
        after_c: usize,
        after_d: usize,
    },

    #[error("invalid input: {0}")]
    Input(String),
}

fn witness_suffix(w: &Option<Vec<usize>>) -> String {
    match w {
        Some(elems) => format!(" (witness vertex {elems:?})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn precondition(condition: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Error::Precondition {
            condition: condition.into(),
            witness,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
