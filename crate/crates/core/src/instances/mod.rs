//! Concrete algebras: the toy skew example, graded matrix algebras, the KLR
//! fixture, the JSON file format and the Hecke skeleton export.

mod file;
mod klr;
mod matrix;
mod skeleton;
mod toy;

pub use file::{AlgebraFile, FORMAT};
pub use klr::{fixture_text, klr_fixture, FIXTURES};
pub use matrix::gen_matrix;
pub use skeleton::{skeleton_for_hecke, SkeletonExport};
pub use toy::gen_toy;

use crate::exactmath::FieldDescriptor;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("bad weights: {0}")]
    BadWeights(String),
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("bad generator spec: {0}")]
    BadSpec(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("verification failed: {invariant}: {witness}")]
    Verify { invariant: String, witness: String },
    #[error("i/o error: {0}")]
    Io(String),
}

fn numbers<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, InstanceError> {
    s.split(',').map(|x| x.trim().parse().map_err(|_| InstanceError::BadSpec(format!("bad number {x:?}")))).collect()
}

/// Builds an instance from a generator spec:
/// `toy:M`, `matrix:N:d1,…,dN:w1,…,wN` (w in one-line notation) or a fixture id.
/// Fixtures are base-changed to the requested field.
pub fn from_spec(spec: &str, desc: FieldDescriptor) -> Result<AlgebraFile, InstanceError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let field = || crate::exactmath::Field::get(desc).map_err(|e| InstanceError::BadSpec(e.to_string()));
    match parts.as_slice() {
        ["toy", m] => {
            let m: usize = m.parse().map_err(|_| InstanceError::BadSpec(format!("bad size {m:?}")))?;
            if m == 0 {
                return Err(InstanceError::BadSpec("toy needs m ≥ 1".into()));
            }
            gen_toy(m, desc).map_err(|e| InstanceError::BadSpec(e.to_string()))
        }
        ["matrix", n, d, w] => {
            let n: usize = n.parse().map_err(|_| InstanceError::BadSpec(format!("bad size {n:?}")))?;
            gen_matrix(n, &numbers(d)?, &numbers(w)?, desc)
        }
        [id] if FIXTURES.contains(id) => klr_fixture(id)?.base_change(field()?).map_err(|e| InstanceError::BadSpec(e.to_string())),
        [id] => Err(InstanceError::UnknownFixture(id.to_string())),
        _ => Err(InstanceError::BadSpec(format!("cannot read {spec:?}"))),
    }
}
