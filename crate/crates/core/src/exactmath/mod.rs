//! Exact arithmetic: rationals, cyclotomic fields, finite fields, Laurent
//! polynomials and dense linear algebra.

mod field;
mod laurent;
mod matrix;
pub(crate) mod poly;

pub use field::{reduce_pi, Field, FieldDescriptor, Op, Scalar};
pub use laurent::LaurentPoly;
pub use matrix::{span_basis, Matrix, Rref};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("descriptor mismatch: {0} vs {1}")]
    DescriptorMismatch(FieldDescriptor, FieldDescriptor),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} has no distinguished root of unity")]
    NoRoot(FieldDescriptor),
    #[error("{0} has no primitive root of unity of order {1}")]
    NoRootOfOrder(FieldDescriptor, u32),
    #[error("denominator of {0} is divisible by {1}")]
    BadDenominator(String, u64),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("invalid field descriptor {0:?}")]
    InvalidDescriptor(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
}

/// Graded dimension helper: Σ t^{d} over a list of degrees.
pub fn graded_dim(degrees: &[i64]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for &d in degrees {
        out.add_term(d, &num_bigint::BigInt::from(1));
    }
    out
}
