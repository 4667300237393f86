use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range for {size} elements")]
    OutOfRange { index: usize, size: usize },

    #[error("relation contains a cycle through element {0}; not a partial order")]
    Cycle(usize),

    #[error("duplicate pair ({0}, {1})")]
    DuplicatePair(usize, usize),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("too many elements: {0} (at most 64 supported)")]
    TooLarge(usize),

    #[error("binomial argument must be affine in x and y, got total degree {0}")]
    NonAffineArgument(u32),

    #[error("chain parameter k = {k} exceeds length n = {n}")]
    ChainParameter { n: usize, k: usize },

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("enumeration of {needed} objects exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("malformed polynomial: {0}")]
    MalformedPoly(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
