use thiserror::Error;

/// Errors raised by the algebraic and combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OreError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("invalid arity {0}: forests need arity at least 2")]
    InvalidArity(usize),

    #[error("boundary mismatch in {context}: expected {expected}, found {found}")]
    BoundaryMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("caret index {index} out of range at step {step} (valid 1..={max})")]
    IndexOutOfRange {
        step: usize,
        index: usize,
        max: usize,
    },

    #[error("{0} is not a left factor")]
    NotALeftFactor(String),

    #[error("{0} is not a right factor")]
    NotARightFactor(String),

    #[error("identity morphism has no head")]
    NoHead,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("unit violates family {family}: {detail}")]
    FamilyViolation { family: String, detail: String },

    #[error("family mismatch: {0} vs {1}")]
    FamilyMismatch(String, String),

    #[error("unit is not in the image of cloning at caret {0}")]
    NotInImage(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("braid index {index} out of range for {strands} strands")]
    BraidIndex { index: i32, strands: usize },

    #[error("{what}: n = {n} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("{what}: size {size} exceeds budget {budget} (set ORE_SIZE_BUDGET to raise)")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        budget: usize,
    },

    #[error("edge {0} not in graph")]
    MissingEdge(String),

    #[error("graph error: {0}")]
    Graph(String),

    #[error("expansion set is not ancestor-closed: {0}")]
    NotAncestorClosed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, OreError>;
