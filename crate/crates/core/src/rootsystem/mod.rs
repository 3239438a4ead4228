//! Root systems, Chevalley bases, classical matrix realizations, and Levi data.

mod algebra;
mod chevalley;
mod classical;
mod levi;
mod roots;
mod types;

use thiserror::Error;

pub use algebra::{element_from_labels, BasisKind, Element, LieAlgebra, Representation};
pub use chevalley::chevalley_algebra;
pub use classical::{build_algebra, classical_algebra, classical_matrix_space, matrix_unit};
pub use levi::{bound_d, levi_data, min_bound_d, subsystem_data, LeviData};
pub use roots::{build_root_system, root_label, RootSystem};
pub use types::{CartanType, Family, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("invalid type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("cannot parse type {0:?}")]
    Parse(String),
    #[error("simple root index {0} out of range")]
    SimpleRootIndex(usize),
    #[error("simple root {0} lies inside the Levi subset")]
    MuInsideLevi(usize),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("element is not in the standard Cartan subalgebra")]
    NotInCartan,
    #[error("construction failed: {0}")]
    Construction(String),
}
