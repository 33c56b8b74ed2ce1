use serde::{Deserialize, Serialize};

use super::InstanceError;
use crate::cellcore::{verify_skew_datum, CellAlgebra, CellError, GradedAlgebra, Report, SkewCellDatum};
use crate::exactmath::{Field, FieldDescriptor, Matrix, Scalar};
use crate::shiftfix::{verify_shift, ShiftAutomorphism};

pub const FORMAT: &str = "skewcell/1";

/// An algebra with optional datum, shift automorphism and embedding into an
/// ambient algebra: the unit of exchange between commands and files.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraFile {
    pub alg: GradedAlgebra,
    pub datum: Option<SkewCellDatum>,
    pub shift: Option<ShiftAutomorphism>,
    pub embedding: Option<Matrix>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    format: String,
    field: String,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Embedding {
    ambient_dim: usize,
    columns: Vec<Vec<(usize, String)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Repr {
    header: Header,
    labels: Vec<String>,
    degrees: Vec<i64>,
    star: Vec<usize>,
    unit: Vec<String>,
    mult: Vec<(usize, usize, Vec<(usize, String)>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    datum: Option<SkewCellDatum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shift: Option<ShiftAutomorphism>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    embedding: Option<Embedding>,
}

fn sparse_strings(v: &[(usize, Scalar)]) -> Vec<(usize, String)> {
    v.iter().map(|(k, c)| (*k, c.to_string())).collect()
}

/// Line and column (1-based) of the first occurrence of a quoted string.
fn locate(text: &str, s: &str) -> (usize, usize) {
    let needle = format!("\"{s}\"");
    match text.find(&needle) {
        Some(pos) => {
            let before = &text[..pos];
            let line = before.matches('\n').count() + 1;
            let col = pos - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, col)
        }
        None => (0, 0),
    }
}

fn first_failure(invariant_prefix: &str, rep: &Report) -> Option<InstanceError> {
    rep.failures().first().map(|c| InstanceError::Verify {
        invariant: format!("{invariant_prefix}{}", c.name),
        witness: c.witness.clone().unwrap_or_default(),
    })
}

impl AlgebraFile {
    pub fn plain(alg: GradedAlgebra) -> Self {
        AlgebraFile { alg, datum: None, shift: None, embedding: None }
    }

    /// The verified cell algebra; fails when there is no datum.
    pub fn cell_algebra(&self) -> Result<CellAlgebra, CellError> {
        let d = self.datum.clone().ok_or_else(|| CellError::DatumNotVerified("the file has no datum".into()))?;
        CellAlgebra::new(self.alg.clone(), d)
    }

    /// The same file with structure constants read in another field.
    pub fn base_change(&self, field: &'static Field) -> Result<AlgebraFile, crate::exactmath::MathError> {
        let embedding = match &self.embedding {
            Some(e) => {
                let mut m = Matrix::zeros(field, e.rows(), e.cols());
                for r in 0..e.rows() {
                    for c in 0..e.cols() {
                        m.set(r, c, field.convert(e.get(r, c))?);
                    }
                }
                Some(m)
            }
            None => None,
        };
        Ok(AlgebraFile { alg: self.alg.base_change(field)?, datum: self.datum.clone(), shift: self.shift.clone(), embedding })
    }

    pub fn to_json(&self) -> String {
        let a = &self.alg;
        let mut mult = Vec::new();
        for (i, row) in a.mult.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_empty() {
                    mult.push((i, j, sparse_strings(v)));
                }
            }
        }
        let embedding = self.embedding.as_ref().map(|e| Embedding {
            ambient_dim: e.rows(),
            columns: (0..e.cols())
                .map(|c| {
                    e.column(c).into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.to_string())).collect()
                })
                .collect(),
        });
        let repr = Repr {
            header: Header { format: FORMAT.into(), field: a.field.descriptor().to_string(), dim: a.dim() },
            labels: a.labels.clone(),
            degrees: a.deg.clone(),
            star: a.star.clone(),
            unit: a.unit.iter().map(|x| x.to_string()).collect(),
            mult,
            datum: self.datum.clone(),
            shift: self.shift.clone(),
            embedding,
        };
        let mut s = serde_json::to_string_pretty(&repr).expect("serializable");
        s.push('\n');
        s
    }

    /// Parses and re-verifies: algebra axioms, then the datum, then the shift.
    pub fn from_json(text: &str) -> Result<AlgebraFile, InstanceError> {
        let repr: Repr = serde_json::from_str(text)
            .map_err(|e| InstanceError::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
        let h = &repr.header;
        if h.format != FORMAT {
            let (line, column) = locate(text, &h.format);
            return Err(InstanceError::Parse { line, column, message: format!("unsupported format {:?}", h.format) });
        }
        let desc: FieldDescriptor = h.field.parse().map_err(|e: crate::exactmath::MathError| {
            let (line, column) = locate(text, &h.field);
            InstanceError::Parse { line, column, message: e.to_string() }
        })?;
        let f = Field::get(desc).map_err(|e| {
            let (line, column) = locate(text, &h.field);
            InstanceError::Parse { line, column, message: e.to_string() }
        })?;
        let scalar = |s: &str| -> Result<Scalar, InstanceError> {
            f.parse(s).map_err(|e| {
                let (line, column) = locate(text, s);
                InstanceError::Parse { line, column, message: format!("bad coefficient {s:?}: {e}") }
            })
        };
        let n = h.dim;
        let lens = [repr.labels.len(), repr.degrees.len(), repr.star.len(), repr.unit.len()];
        if lens.iter().any(|&l| l != n) {
            return Err(InstanceError::Verify { invariant: "header.dim".into(), witness: format!("dim {n} but table lengths {lens:?}") });
        }
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, j, terms) in &repr.mult {
            if *i >= n || *j >= n || terms.iter().any(|(k, _)| *k >= n) {
                return Err(InstanceError::Verify { invariant: "header.dim".into(), witness: format!("product ({i}, {j}) has an index ≥ {n}") });
            }
            let mut v = Vec::with_capacity(terms.len());
            for (k, c) in terms {
                let x = scalar(c)?;
                if !x.is_zero() {
                    v.push((*k, x));
                }
            }
            v.sort_by_key(|(k, _)| *k);
            mult[*i][*j] = v;
        }
        let unit = repr.unit.iter().map(|s| scalar(s)).collect::<Result<Vec<_>, _>>()?;
        let alg = GradedAlgebra { field: f, labels: repr.labels, deg: repr.degrees, mult, star: repr.star, unit };
        if let Some(e) = first_failure("", &alg.structure_report()) {
            return Err(e);
        }
        if let Some(d) = &repr.datum {
            if let Some(e) = first_failure("", &verify_skew_datum(&alg, d)) {
                return Err(e);
            }
        }
        if let Some(s) = &repr.shift {
            let Some(d) = &repr.datum else {
                return Err(InstanceError::Verify { invariant: "shift.shape".into(), witness: "a shift needs a datum".into() });
            };
            if let Some(e) = first_failure("", &verify_shift(&alg, d, s).report) {
                return Err(e);
            }
        }
        let embedding = match repr.embedding {
            Some(e) => {
                let mut m = Matrix::zeros(f, e.ambient_dim, e.columns.len());
                if e.columns.len() != n {
                    return Err(InstanceError::Verify {
                        invariant: "embedding.shape".into(),
                        witness: format!("{} columns for dimension {n}", e.columns.len()),
                    });
                }
                for (c, col) in e.columns.iter().enumerate() {
                    for (r, x) in col {
                        if *r >= e.ambient_dim {
                            return Err(InstanceError::Verify { invariant: "embedding.shape".into(), witness: format!("row {r} out of range") });
                        }
                        m.set(*r, c, scalar(x)?);
                    }
                }
                Some(m)
            }
            None => None,
        };
        Ok(AlgebraFile { alg, datum: repr.datum, shift: repr.shift, embedding })
    }

    pub fn save(&self, path: &std::path::Path) -> Result<(), InstanceError> {
        std::fs::write(path, self.to_json()).map_err(|e| InstanceError::Io(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &std::path::Path) -> Result<AlgebraFile, InstanceError> {
        let text = std::fs::read_to_string(path).map_err(|e| InstanceError::Io(format!("{}: {e}", path.display())))?;
        AlgebraFile::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_matrix, gen_toy};

    #[test]
    fn round_trip_is_exact() {
        let t = gen_toy(3, FieldDescriptor::Cyclotomic(2)).unwrap();
        let s = t.to_json();
        let back = AlgebraFile::from_json(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn parse_errors_have_positions() {
        let t = gen_toy(2, FieldDescriptor::Rational).unwrap();
        let s = t.to_json().replacen("\"labels\"", "\"labels\" oops", 1);
        match AlgebraFile::from_json(&s) {
            Err(InstanceError::Parse { line, column, .. }) => assert!(line > 1 && column > 1),
            other => panic!("{other:?}"),
        }
        let s = t.to_json().replacen("\"1\"", "\"1/\"", 1);
        assert!(matches!(AlgebraFile::from_json(&s), Err(InstanceError::Parse { line, .. }) if line > 1));
    }

    #[test]
    fn verify_errors_name_the_invariant() {
        let mut m = gen_matrix(2, &[1, -1], &[1, 2], FieldDescriptor::Rational).unwrap();
        m.alg.deg[0] += 2;
        match AlgebraFile::from_json(&m.to_json()) {
            Err(InstanceError::Verify { invariant, .. }) => assert_eq!(invariant, "algebra.grading"),
            other => panic!("{other:?}"),
        }
    }
}
