//! Graded skew cellular algebras: datum verification, cell modules, bilinear
//! forms, simple modules, the Jacobson radical and graded decomposition
//! matrices.

mod algebra;
mod cells;
mod datum;
mod decomp;
mod module;
mod oracle;
mod report;

pub use algebra::{to_dense, to_sparse, GradedAlgebra, Sparse};
pub use cells::{
    cell_module, cell_radical, dual_simple_check, gram, gram_u_independent, gram_with, left_radical_dim, p0, phi_property_suite,
    simple_module,
};
pub use datum::{verify_skew_datum, CellAlgebra, SkewCellDatum, Tab};
pub use decomp::{graded_decomp, jacobson_radical, row_graded_dim, DecompMatrix};
pub use module::{GradedModule, HomVec};
pub use oracle::composition_factors_bruteforce;
pub use report::{AxiomCheck, Report};

use crate::exactmath::MathError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("datum not verified: {0}")]
    DatumNotVerified(String),
    #[error("splitting check failed: {0}")]
    SplitCheckFailed(String),
    #[error("radical check failed: {0}")]
    RadicalCheckFailed(String),
    #[error("decomposition check failed: {0}")]
    DecompCheckFailed(String),
    #[error(transparent)]
    Math(#[from] MathError),
}
