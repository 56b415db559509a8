use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("size guard exceeded: {what} has {size} items, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("vectors are linearly dependent")]
    DependentVectors,

    #[error("invalid projector: {0}")]
    InvalidProjector(String),

    #[error("incompatible elements")]
    Incompatible,

    #[error("closure blowup: more than {cap} elements")]
    ClosureBlowup { cap: usize },

    #[error("graph is not an acepBA atom graph: {0}")]
    NotAtomGraph(String),

    #[error("algebra is not exclusive")]
    NotExclusive,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("not a state: {0}")]
    NotState(String),

    #[error("not a substate: {0}")]
    NotSubstate(String),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
