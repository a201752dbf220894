use thiserror::Error;

use crate::orderings::Triple;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("not a permutation of 1..={n}: {msg}")]
    NotAPermutation { n: usize, msg: String },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("instance too large: n = {n} exceeds limit {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("ordering is not umbrella-free, witness {0}")]
    NotUmbrellaFree(Triple),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cycle in order relation through vertex {0}")]
    CyclicRelation(usize),

    #[error("{0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
