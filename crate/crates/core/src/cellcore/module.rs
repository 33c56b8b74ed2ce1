use std::collections::BTreeMap;

use super::algebra::GradedAlgebra;
use super::report::{AxiomCheck, Report};
use crate::exactmath::{graded_dim, Field, LaurentPoly, MathError, Matrix, Scalar};

/// A finite-dimensional graded module with a homogeneous basis. action[a]
/// is the matrix of the algebra basis element a (column j is a·b_j).
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub field: &'static Field,
    pub deg: Vec<i64>,
    pub action: Vec<Matrix>,
}

impl PartialEq for GradedModule {
    fn eq(&self, other: &Self) -> bool {
        self.field.descriptor() == other.field.descriptor() && self.deg == other.deg && self.action == other.action
    }
}

/// A homogeneous vector of a graded module.
pub type HomVec = (Vec<Scalar>, i64);

impl GradedModule {
    pub fn dim(&self) -> usize {
        self.deg.len()
    }

    pub fn graded_dim(&self) -> LaurentPoly {
        graded_dim(&self.deg)
    }

    /// M⟨s⟩: every degree moves up by s.
    pub fn shift(&self, s: i64) -> GradedModule {
        GradedModule { field: self.field, deg: self.deg.iter().map(|d| d + s).collect(), action: self.action.clone() }
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, a: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.action[i].mul_vec(v)) {
                *o = &*o + &(c * &x);
            }
        }
        out
    }

    /// Module axioms: representation property, unit, degree compatibility.
    pub fn check(&self, alg: &GradedAlgebra) -> Report {
        let mut rep = Report::default();
        let n = alg.dim();
        let mut w = None;
        'rep: for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]).expect("square");
                let mut rhs = Matrix::zeros(self.field, self.dim(), self.dim());
                for (k, c) in &alg.mult[i][j] {
                    rhs = rhs.add(&self.action[*k].scale(c));
                }
                if lhs != rhs {
                    w = Some(format!("({} {}) acts differently from {} after {}", alg.labels[i], alg.labels[j], alg.labels[i], alg.labels[j]));
                    break 'rep;
                }
            }
        }
        rep.push(AxiomCheck::with_witness("module.representation", w));
        let mut unit = Matrix::zeros(self.field, self.dim(), self.dim());
        for (i, c) in alg.unit.iter().enumerate() {
            if !c.is_zero() {
                unit = unit.add(&self.action[i].scale(c));
            }
        }
        let id = Matrix::identity(self.field, self.dim());
        rep.push(AxiomCheck::new("module.unit", unit == id, || "the unit does not act as the identity".into()));
        let mut w = None;
        'deg: for (a, m) in self.action.iter().enumerate() {
            for r in 0..self.dim() {
                for c in 0..self.dim() {
                    if !m.get(r, c).is_zero() && self.deg[r] != self.deg[c] + alg.deg[a] {
                        w = Some(format!("{} sends degree {} to degree {}", alg.labels[a], self.deg[c], self.deg[r]));
                        break 'deg;
                    }
                }
            }
        }
        rep.push(AxiomCheck::with_witness("module.grading", w));
        rep
    }

    /// The span of the given homogeneous vectors with a homogeneous basis.
    pub fn graded_span(&self, vecs: &[HomVec]) -> Vec<HomVec> {
        let mut by_deg: BTreeMap<i64, Vec<Vec<Scalar>>> = BTreeMap::new();
        for (v, d) in vecs {
            by_deg.entry(*d).or_default().push(v.clone());
        }
        let mut out = Vec::new();
        for (d, vs) in by_deg {
            for v in crate::exactmath::span_basis(self.field, self.dim(), &vs) {
                out.push((v, d));
            }
        }
        out
    }

    /// Standard basis vectors of degree d.
    fn std_vec(&self, j: usize) -> HomVec {
        let mut v = vec![self.field.zero(); self.dim()];
        v[j] = self.field.one();
        (v, self.deg[j])
    }

    /// The submodule with the given homogeneous basis; errors if it is not
    /// closed under the action.
    pub fn submodule(&self, basis: &[HomVec]) -> Result<GradedModule, MathError> {
        let k = basis.len();
        let cols: Vec<Vec<Scalar>> = basis.iter().map(|(v, _)| v.clone()).collect();
        let b = Matrix::from_columns(self.field, self.dim(), &cols);
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let image = m.mul(&b)?;
            let coords = if k == 0 { Matrix::zeros(self.field, 0, 0) } else { b.solve(&image)? };
            action.push(coords);
        }
        Ok(GradedModule { field: self.field, deg: basis.iter().map(|(_, d)| *d).collect(), action })
    }

    /// M/N for a submodule N given by a homogeneous basis. The quotient basis
    /// is the images of the standard vectors outside the pivots of N.
    pub fn quotient(&self, sub: &[HomVec]) -> Result<GradedModule, MathError> {
        let sub = self.graded_span(sub);
        let mut pivots = vec![false; self.dim()];
        for (v, _) in &sub {
            let p = v.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
            pivots[p] = true;
        }
        let comp: Vec<usize> = (0..self.dim()).filter(|&j| !pivots[j]).collect();
        let mut cols: Vec<Vec<Scalar>> = sub.iter().map(|(v, _)| v.clone()).collect();
        cols.extend(comp.iter().map(|&j| self.std_vec(j).0));
        let change = Matrix::from_columns(self.field, self.dim(), &cols).inverse()?;
        let ns = sub.len();
        let q = comp.len();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut out = Matrix::zeros(self.field, q, q);
            for (c, &j) in comp.iter().enumerate() {
                let coords = change.mul_vec(&m.column(j));
                for r in 0..q {
                    out.set(r, c, coords[ns + r].clone());
                }
            }
            action.push(out);
        }
        Ok(GradedModule { field: self.field, deg: comp.iter().map(|&j| self.deg[j]).collect(), action })
    }

    /// The dual M* with (a·f)(x) = f(a*·x) and negated degrees.
    pub fn dual(&self, alg: &GradedAlgebra) -> GradedModule {
        let action = (0..alg.dim()).map(|a| self.action[alg.star[a]].transpose()).collect();
        GradedModule { field: self.field, deg: self.deg.iter().map(|d| -d).collect(), action }
    }

    /// J·M for a list of algebra elements spanning J.
    pub fn image_under(&self, elems: &[HomVec], sub: &[HomVec]) -> Vec<HomVec> {
        let mut out = Vec::new();
        for (a, da) in elems {
            for (v, dv) in sub {
                let w = self.act(a, v);
                if w.iter().any(|x| !x.is_zero()) {
                    out.push((w, da + dv));
                }
            }
        }
        self.graded_span(&out)
    }

    /// Dimension of the space of module maps M → N of the given degree
    /// (f(M_d) ⊆ N_{d+k}); None means all degrees at once.
    pub fn hom_dim(&self, other: &GradedModule, degree: Option<i64>) -> usize {
        // unknowns f[j][i] for allowed pairs (i in M, j in N)
        let mut var = BTreeMap::new();
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                if degree.is_none_or(|k| other.deg[j] == self.deg[i] + k) {
                    let n = var.len();
                    var.insert((j, i), n);
                }
            }
        }
        if var.is_empty() {
            return 0;
        }
        let f = self.field;
        let mut rows = Vec::new();
        for (ma, na) in self.action.iter().zip(&other.action) {
            // (N_a F − F M_a)[j][i] = Σ_r N_a[j][r] F[r][i] − Σ_r F[j][r] M_a[r][i]
            for j in 0..other.dim() {
                for i in 0..self.dim() {
                    let mut row = vec![f.zero(); var.len()];
                    let mut any = false;
                    for r in 0..other.dim() {
                        let c = na.get(j, r);
                        if let (false, Some(&x)) = (c.is_zero(), var.get(&(r, i))) {
                            row[x] = &row[x] + c;
                            any = true;
                        }
                    }
                    for r in 0..self.dim() {
                        let c = ma.get(r, i);
                        if let (false, Some(&x)) = (c.is_zero(), var.get(&(j, r))) {
                            row[x] = &row[x] - c;
                            any = true;
                        }
                    }
                    if any {
                        rows.push(row);
                    }
                }
            }
        }
        if rows.is_empty() {
            return var.len();
        }
        let m = Matrix::from_rows(f, rows).expect("uniform rows");
        var.len() - m.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FieldDescriptor;

    fn dual_numbers() -> GradedAlgebra {
        let f = Field::get(FieldDescriptor::Rational).unwrap();
        let one = f.one();
        let mult = vec![vec![vec![(0, one.clone())], vec![(1, one.clone())]], vec![vec![(1, one.clone())], vec![]]];
        GradedAlgebra { field: f, labels: vec!["1".into(), "x".into()], deg: vec![0, 2], mult, star: vec![0, 1], unit: vec![one, f.zero()] }
    }

    /// The regular module of F[x]/(x²): basis 1, x in degrees 0, 2.
    fn regular() -> (GradedAlgebra, GradedModule) {
        let a = dual_numbers();
        let action = (0..2).map(|i| a.left_matrix(&a.basis_vec(i))).collect();
        let m = GradedModule { field: a.field, deg: a.deg.clone(), action };
        (a, m)
    }

    #[test]
    fn regular_module_is_a_module() {
        let (a, m) = regular();
        assert!(m.check(&a).all_passed());
    }

    #[test]
    fn sub_quotient_and_homs() {
        let (a, m) = regular();
        let f = a.field;
        let rad = vec![(vec![f.zero(), f.one()], 2)];
        let sub = m.submodule(&rad).unwrap();
        let top = m.quotient(&rad).unwrap();
        assert_eq!(sub.deg, vec![2]);
        assert_eq!(top.deg, vec![0]);
        assert!(top.check(&a).all_passed());
        // the top maps onto the socle with degree 2
        assert_eq!(top.hom_dim(&sub, Some(2)), 1);
        assert_eq!(top.hom_dim(&sub, Some(0)), 0);
        assert_eq!(m.hom_dim(&top, Some(0)), 1);
        assert_eq!(m.hom_dim(&m, None), 2);
        assert_eq!(sub.shift(-2).hom_dim(&top, Some(0)), 1);
        let jm = m.image_under(&[(a.basis_vec(1), 2)], &[(a.basis_vec(0), 0), (a.basis_vec(1), 2)]);
        assert_eq!(jm, rad);
    }

    #[test]
    fn dual_negates_degrees() {
        let (a, m) = regular();
        let d = m.dual(&a);
        assert!(d.check(&a).all_passed());
        assert_eq!(d.graded_dim(), m.graded_dim().bar());
    }
}
