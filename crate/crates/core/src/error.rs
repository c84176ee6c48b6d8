use thiserror::Error;

/// Everything that can go wrong while building or transforming polynomial maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} input coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("block index {index} out of range for a profile with {blocks} blocks")]
    BlockOutOfRange { index: usize, blocks: usize },

    #[error("block mismatch: {0}")]
    BlockMismatch(String),

    #[error("interface mismatch: inner map has codomain {inner_codomain}, outer map expects {outer_domain} inputs")]
    InterfaceMismatch {
        inner_codomain: usize,
        outer_domain: usize,
    },

    #[error("total derivative needs a single-block domain, found {0} blocks (reblock first)")]
    MultiBlockDomain(usize),

    #[error("not D-linear in block {0}")]
    NotDLinear(usize),

    #[error("arity profile must have at least one block")]
    EmptyProfile,

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
