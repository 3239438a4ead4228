//! Exact linear algebra over arbitrary-precision rationals.

mod eigen;
mod matrix;
mod poly;
mod subspace;

use num::BigRational;
use thiserror::Error;

pub use eigen::{joint_eigenspaces, minimal_polynomial, minpoly_is_squarefree, Eigenspace};
pub use matrix::{AffineSolution, QMatrix};
pub use poly::Poly;
pub use subspace::Subspace;

/// The scalar type used everywhere.
pub type Q = BigRational;

/// Integer shorthand for building rationals.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `n/d` shorthand; panics when `d == 0`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("operator is not semisimple")]
    NotSemisimple,
    #[error("operator has an irrational eigenvalue")]
    IrrationalSpectrum,
}
