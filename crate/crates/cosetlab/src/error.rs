use thiserror::Error;

/// Errors produced by group construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("cannot parse {input:?} as a permutation: {reason}")]
    ParseCycles { input: String, reason: String },

    #[error("cannot parse group file: line {line}: {reason}")]
    ParseGroupFile { line: usize, reason: String },

    #[error("closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("{0} is not a subgroup of the given group")]
    NotSubgroup(String),

    #[error("{0} is not normal in the given group")]
    NotNormal(String),

    #[error("subgroup containment violated: {0}")]
    Containment(String),

    #[error("element {0} does not belong to the group")]
    NotMember(String),

    #[error("transversal extension requires |G:H| <= |G:K|, but |G:H| = {h_index} > |G:K| = {k_index}")]
    IndexCondition { h_index: usize, k_index: usize },

    #[error("expected a left coset and a right coset, got two of the same side")]
    SideMismatch,

    #[error("invalid catalog parameters: {0}")]
    BadCatalogParameters(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
