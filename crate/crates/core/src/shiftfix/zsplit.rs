use super::shift::ShiftAutomorphism;
use crate::cellcore::{AxiomCheck, GradedAlgebra, Report};
use crate::exactmath::{Matrix, Scalar};

/// An invertible degree-0 element with σ_A(z) = εz.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZElement {
    pub z: Vec<Scalar>,
    pub z_inv: Vec<Scalar>,
    /// Which eigenvectors of the sweep were summed.
    pub subset: Vec<usize>,
}

/// Most subsets of eigenvectors tried before giving up.
const SWEEP_LIMIT: usize = 1 << 14;

/// Degree-0 basis of ker(σ_A − ε): one vector per σ_A-orbit of length s_p,
/// a_{σ^j(i)} = ε^{−j} starting at the least index i of the orbit.
fn eigen_basis(alg: &GradedAlgebra, sh: &ShiftAutomorphism, eps: &Scalar, s_p: usize) -> Vec<Vec<Scalar>> {
    let mut seen = vec![false; alg.dim()];
    let mut out = Vec::new();
    let inv = eps.inv().expect("ε is a unit");
    for i in 0..alg.dim() {
        if seen[i] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = i;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = sh.sigma_a[x];
        }
        if orbit.len() != s_p || alg.deg[i] != 0 {
            continue;
        }
        let mut v = alg.zero_vec();
        for (j, &b) in orbit.iter().enumerate() {
            v[b] = inv.pow(j as i64);
        }
        out.push(v);
    }
    out
}

fn inverse_of(alg: &GradedAlgebra, z: &[Scalar]) -> Option<Vec<Scalar>> {
    let inv = alg.left_matrix(z).inverse().ok()?;
    Some(inv.mul_vec(&alg.unit))
}

/// Searches the degree-0 ε-eigenspace of σ_A for an invertible element:
/// single eigenvectors first, then sums over larger and larger subsets in
/// lexicographic order.
pub fn find_z(alg: &GradedAlgebra, sh: &ShiftAutomorphism, eps: &Scalar, s_p: usize) -> Option<ZElement> {
    let basis = eigen_basis(alg, sh, eps, s_p);
    let n = basis.len();
    let mut tried = 0;
    for size in 1..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried > SWEEP_LIMIT {
                return None;
            }
            let mut z = alg.zero_vec();
            for &i in &idx {
                for (a, b) in z.iter_mut().zip(&basis[i]) {
                    *a = &*a + b;
                }
            }
            if let Some(z_inv) = inverse_of(alg, &z) {
                return Some(ZElement { z, z_inv, subset: idx });
            }
            // next combination
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Checks that z is an invertible degree-0 ε-eigenvector, that z^i A^σ is the
/// ε^i-eigenspace and that A = ⊕_{i<s_p} z^i A^σ.
pub fn z_decomposition_check(alg: &GradedAlgebra, sh: &ShiftAutomorphism, eps: &Scalar, s_p: usize, emb: &Matrix, z: &ZElement) -> Report {
    let f = alg.field;
    let mut rep = Report::default();
    let sz = sh.apply_vec(&z.z);
    let ez: Vec<Scalar> = z.z.iter().map(|x| eps * x).collect();
    rep.push(AxiomCheck::new("z.eigenvector", sz == ez, || "σ_A(z) != εz".into()));
    rep.push(AxiomCheck::new("z.degree", alg.degree_of(&z.z) == Some(0), || "z is not homogeneous of degree 0".into()));
    let one = alg.mul(&z.z, &z.z_inv) == alg.unit && alg.mul(&z.z_inv, &z.z) == alg.unit;
    rep.push(AxiomCheck::new("z.invertible", one, || "z z⁻¹ != 1".into()));

    let m = emb.cols();
    let mut all = Vec::new();
    let mut w = None;
    let mut zi = alg.unit.clone();
    for i in 0..s_p {
        let block: Vec<Vec<Scalar>> = (0..m).map(|b| alg.mul(&zi, &emb.column(b))).collect();
        let ei = eps.pow(i as i64);
        if w.is_none() {
            if let Some(b) = block.iter().position(|v| sh.apply_vec(v) != v.iter().map(|x| &ei * x).collect::<Vec<_>>()) {
                w = Some(format!("z^{i} times fixed basis element {b} is not in the ε^{i}-eigenspace"));
            }
        }
        all.extend(block);
        zi = alg.mul(&zi, &z.z);
    }
    rep.push(AxiomCheck::with_witness("z.eigenspaces", w));
    let rank = Matrix::from_columns(f, alg.dim(), &all).rank();
    rep.push(AxiomCheck::new("z.direct_sum", rank == alg.dim() && m * s_p == alg.dim(), || {
        format!("rank of ⋃ z^i A^σ is {rank}, dim A = {}, s_p·dim A^σ = {}", alg.dim(), m * s_p)
    }));
    rep
}
