use thiserror::Error;

use crate::poly::IntPolynomial;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("matrix dimension {dim} exceeds the exact charpoly cap {cap}; use charpoly_mod for larger inputs")]
    DimensionCap { dim: usize, cap: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("polynomial {0} is reducible over the prime field")]
    Reducible(String),

    #[error("factor mismatch: division left remainder {remainder}")]
    FactorMismatch { remainder: IntPolynomial },

    #[error("cubic discriminant is {0} (not negative): three distinct real roots are not guaranteed")]
    NonNegativeDiscriminant(String),

    #[error("polynomial has non-real roots")]
    NonRealRoots,

    #[error("{0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
