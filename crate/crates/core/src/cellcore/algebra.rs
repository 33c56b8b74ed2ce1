use crate::exactmath::{Field, MathError, Matrix, Scalar};

use super::report::{AxiomCheck, Report};

/// Sparse vector: (basis index, nonzero coefficient), indices ascending.
pub type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional graded algebra given by structure constants on a
/// homogeneous basis, with an anti-involution that permutes the basis.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub field: &'static Field,
    pub labels: Vec<String>,
    pub deg: Vec<i64>,
    /// mult[i][j] = e_i e_j.
    pub mult: Vec<Vec<Sparse>>,
    pub star: Vec<usize>,
    pub unit: Vec<Scalar>,
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field.descriptor() == other.field.descriptor()
            && self.labels == other.labels
            && self.deg == other.deg
            && self.mult == other.mult
            && self.star == other.star
            && self.unit == other.unit
    }
}

pub fn to_sparse(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(field: &'static Field, dim: usize, v: &Sparse) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

impl GradedAlgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        to_dense(self.field, self.dim(), &self.mult[i][j])
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.mult[i][j] {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    pub fn mul_sparse(&self, a: &Sparse, b: &Sparse) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in &self.mult[*i][*j] {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of v ↦ a·v (column j is a·e_j).
    pub fn left_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(a, &self.basis_vec(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    pub fn star_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.star[i]] = x.clone();
        }
        out
    }

    /// Degree of a nonzero homogeneous vector; None if zero or mixed.
    pub fn degree_of(&self, v: &[Scalar]) -> Option<i64> {
        let mut d = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match d {
                None => d = Some(self.deg[i]),
                Some(e) if e != self.deg[i] => return None,
                _ => {}
            }
        }
        d
    }

    /// The same structure constants read in another field of the tower.
    pub fn base_change(&self, field: &'static Field) -> Result<GradedAlgebra, MathError> {
        let conv = |v: &Sparse| -> Result<Sparse, MathError> {
            let mut out = Vec::with_capacity(v.len());
            for (k, c) in v {
                let x = field.convert(c)?;
                if !x.is_zero() {
                    out.push((*k, x));
                }
            }
            Ok(out)
        };
        let mut mult = Vec::with_capacity(self.dim());
        for row in &self.mult {
            mult.push(row.iter().map(conv).collect::<Result<Vec<_>, _>>()?);
        }
        let unit = self.unit.iter().map(|x| field.convert(x)).collect::<Result<Vec<_>, _>>()?;
        Ok(GradedAlgebra { field, labels: self.labels.clone(), deg: self.deg.clone(), mult, star: self.star.clone(), unit })
    }

    /// Shape, associativity, unit, grading and star checks.
    pub fn structure_report(&self) -> Report {
        let n = self.dim();
        let mut rep = Report::default();
        let shape_ok = self.deg.len() == n
            && self.star.len() == n
            && self.unit.len() == n
            && self.mult.len() == n
            && self.mult.iter().all(|r| r.len() == n && r.iter().all(|v| v.iter().all(|(k, _)| *k < n)));
        rep.push(AxiomCheck::new("algebra.shape", shape_ok, || "table sizes disagree with the basis".into()));
        if !shape_ok {
            return rep;
        }
        let desc = self.field.descriptor();
        let fields_ok = self.mult.iter().flatten().flatten().all(|(_, c)| c.descriptor() == desc)
            && self.unit.iter().all(|c| c.descriptor() == desc);
        rep.push(AxiomCheck::new("algebra.field", fields_ok, || "coefficient from another field".into()));

        let mut witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mult[i][j] {
                    if self.deg[*k] != self.deg[i] + self.deg[j] {
                        witness = Some(format!("{} * {} has a term {} {} of the wrong degree", self.labels[i], self.labels[j], c, self.labels[*k]));
                        break 'outer;
                    }
                }
            }
        }
        rep.push(AxiomCheck::with_witness("algebra.grading", witness));

        let mut witness = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let left = self.mul_sparse(ij, &vec![(k, self.field.one())]);
                    let right = self.mul_sparse(&vec![(i, self.field.one())], &self.mult[j][k]);
                    if left != right {
                        witness = Some(format!("({}, {}, {})", self.labels[i], self.labels[j], self.labels[k]));
                        break 'assoc;
                    }
                }
            }
        }
        rep.push(AxiomCheck::with_witness("algebra.associativity", witness));

        let mut witness = None;
        for i in 0..n {
            let e = self.basis_vec(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                witness = Some(format!("unit fails on {}", self.labels[i]));
                break;
            }
        }
        rep.push(AxiomCheck::with_witness("algebra.unit", witness));

        let mut seen = vec![false; n];
        let perm_ok = self.star.iter().all(|&s| s < n && !std::mem::replace(&mut seen[s], true));
        let mut witness = if perm_ok { None } else { Some("star is not a permutation".to_string()) };
        if perm_ok {
            for i in 0..n {
                if self.star[self.star[i]] != i {
                    witness = Some(format!("star is not an involution at {}", self.labels[i]));
                    break;
                }
                if self.deg[self.star[i]] != self.deg[i] {
                    witness = Some(format!("star changes the degree of {}", self.labels[i]));
                    break;
                }
            }
        }
        if witness.is_none() {
            'star: for i in 0..n {
                for j in 0..n {
                    let lhs = self.star_vec(&self.mul_basis(i, j));
                    let rhs = self.mul_basis(self.star[j], self.star[i]);
                    if lhs != rhs {
                        witness = Some(format!("(e_i e_j)* != e_j* e_i* for ({}, {})", self.labels[i], self.labels[j]));
                        break 'star;
                    }
                }
            }
        }
        rep.push(AxiomCheck::with_witness("algebra.star", witness));
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FieldDescriptor;

    /// F[x]/(x²) with deg x = 2.
    pub(crate) fn dual_numbers() -> GradedAlgebra {
        let f = Field::get(FieldDescriptor::Rational).unwrap();
        let one = f.one();
        let mult = vec![vec![vec![(0, one.clone())], vec![(1, one.clone())]], vec![vec![(1, one.clone())], vec![]]];
        GradedAlgebra { field: f, labels: vec!["1".into(), "x".into()], deg: vec![0, 2], mult, star: vec![0, 1], unit: vec![one, f.zero()] }
    }

    #[test]
    fn dual_numbers_are_fine() {
        let a = dual_numbers();
        assert!(a.structure_report().all_passed());
        let x = a.basis_vec(1);
        assert!(a.mul(&x, &x).iter().all(|c| c.is_zero()));
        assert_eq!(a.degree_of(&x), Some(2));
    }

    #[test]
    fn broken_grading_is_reported() {
        let mut a = dual_numbers();
        a.deg[1] = 1;
        a.mult[1][1] = vec![(1, a.field.one())];
        let rep = a.structure_report();
        assert!(!rep.passed("algebra.grading"));
        assert!(!rep.passed("algebra.associativity") || !rep.passed("algebra.grading"));
    }
}
