//! Exact scalars over F_p and Q, and dense linear algebra on top of them.

mod matrix;
mod scalar;

pub use matrix::{span_rank, DenseMatrix, Rref};
pub use scalar::{Field, Scalar};
