//! Shift automorphisms of skew cellular algebras, the fixed-point subalgebra
//! with its shifted cell datum, Clifford-theory checks and the adjustment
//! matrix between characteristic 0 and characteristic c.

mod adjust;
mod clifford;
mod fixed;
mod shift;
mod zsplit;

pub use adjust::{adjustment, Adjustment};
pub use clifford::{clifford_suite, CliffordReport};
pub use fixed::{fixed_point_datum, FixedPointResult, OrbitInfo};
pub use shift::{is_permutation, perm_order, perm_pow, verify_shift, ShiftAutomorphism, ShiftReport};
pub use zsplit::{find_z, z_decomposition_check, ZElement};

use crate::cellcore::CellError;
use crate::exactmath::MathError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("shift automorphism not verified: {0}")]
    ShiftNotVerified(String),
    #[error("ε has order {found:?}, expected {expected}")]
    BadRootOrder { expected: usize, found: Option<u64> },
    #[error("characteristic {c} divides the order {s_p} of σ")]
    CharDividesOrder { s_p: usize, c: u64 },
    #[error("fixed-point basis mismatch: {0}")]
    FixedBasisMismatch(String),
    #[error("structure constants are not integral: {0}")]
    NotIntegral(String),
    #[error("adjustment matrix could not be solved: {0}")]
    SolveFailed(String),
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error(transparent)]
    Math(#[from] MathError),
}
