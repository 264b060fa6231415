//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("sublattice is not saturated")]
    NotSaturated,

    #[error("configuration spans only rank {found} of ambient rank {ambient}")]
    NotFullDimensional { ambient: usize, found: usize },

    #[error("polytope is not smooth; the edge criterion applies to smooth polytopes only")]
    NotSmooth,

    #[error("evaluation point has a zero coordinate at index {index}")]
    ZeroCoordinate { index: usize },

    #[error("configuration is not generically {order}-jet spanned (jet rank {rank} < {required})")]
    NotGenericallySpanned {
        order: u32,
        rank: usize,
        required: usize,
    },

    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("cross-check mismatch: {0}")]
    Mismatch(String),

    /// A smooth, fully jet-spanned, non-Veronese input produced a
    /// degenerate or non-birational order-k Gauss map. This cannot happen
    /// if the implementation is correct, so it is surfaced as a hard error.
    #[error("finiteness consistency violated: {0}")]
    ConsistencyViolation(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
