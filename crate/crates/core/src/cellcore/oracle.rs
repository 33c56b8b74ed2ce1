use num_bigint::BigInt;

use super::cells::{cell_module, p0, simple_module};
use super::datum::CellAlgebra;
use super::decomp::DecompMatrix;
use super::module::{GradedModule, HomVec};
use super::CellError;
use crate::exactmath::{LaurentPoly, Scalar};

/// Most candidate vectors tried per degree.
const ENUM_LIMIT: usize = 50_000;

/// Coefficients tried for each coordinate: all elements of a small prime
/// field, otherwise the integer box −2..2.
fn coefficient_set(m: &GradedModule) -> Vec<Scalar> {
    let f = m.field;
    let c = f.characteristic();
    if c != 0 && c <= 7 && f.degree() == 1 {
        (0..c as i64).map(|x| f.from_int(x)).collect()
    } else {
        (-2..=2).map(|x| f.from_int(x)).collect()
    }
}

/// Homogeneous vectors of M with coordinates in the coefficient set.
fn candidates(m: &GradedModule) -> Vec<HomVec> {
    let f = m.field;
    let coeffs = coefficient_set(m);
    let mut degs = m.deg.clone();
    degs.sort_unstable();
    degs.dedup();
    let mut out = Vec::new();
    for d in degs {
        let idx: Vec<usize> = (0..m.dim()).filter(|&i| m.deg[i] == d).collect();
        let total = coeffs.len().checked_pow(idx.len() as u32).unwrap_or(usize::MAX).min(ENUM_LIMIT);
        for mut code in 1..total {
            let mut v = vec![f.zero(); m.dim()];
            for &i in &idx {
                v[i] = coeffs[code % coeffs.len()].clone();
                code /= coeffs.len();
            }
            if v.iter().any(|x| !x.is_zero()) {
                out.push((v, d));
            }
        }
    }
    out
}

/// A·v as a graded span.
fn cyclic(m: &GradedModule, v: &HomVec, alg_deg: &[i64]) -> Vec<HomVec> {
    let mut gens = Vec::with_capacity(m.action.len());
    for (a, mat) in m.action.iter().enumerate() {
        let w = mat.mul_vec(&v.0);
        if w.iter().any(|x| !x.is_zero()) {
            gens.push((w, v.1 + alg_deg[a]));
        }
    }
    m.graded_span(&gens)
}

/// Graded composition factors of every cell module, found by repeatedly
/// splitting off a minimal cyclic submodule and certifying it isomorphic to
/// a shifted simple D_μ. Independent of the radical-layer computation.
pub fn composition_factors_bruteforce(ca: &CellAlgebra) -> Result<DecompMatrix, CellError> {
    let order = ca.datum.total_order();
    let cols: Vec<usize> = {
        let p = p0(ca);
        order.iter().copied().filter(|l| p.contains(l)).collect()
    };
    let simples: Vec<GradedModule> = cols.iter().map(|&m| simple_module(ca, m).expect("μ ∈ P_0")).collect();
    let mut entries = Vec::with_capacity(order.len());
    for &l in &order {
        let mut row = vec![LaurentPoly::zero(); cols.len()];
        let mut m = cell_module(ca, l);
        while m.dim() > 0 {
            let best = candidates(&m)
                .iter()
                .map(|v| cyclic(&m, v, &ca.alg.deg))
                .min_by_key(|s| s.len())
                .expect("a nonzero module has nonzero vectors");
            let sub = m.submodule(&best)?;
            let found = simples.iter().enumerate().find_map(|(i, d)| {
                if d.dim() != sub.dim() {
                    return None;
                }
                let lo = d.deg.iter().min()? - sub.deg.iter().max()?;
                let hi = d.deg.iter().max()? - sub.deg.iter().min()?;
                (lo..=hi).find(|&g| sub.hom_dim(d, Some(g)) > 0).map(|g| (i, g))
            });
            let Some((i, g)) = found else {
                return Err(CellError::DecompCheckFailed(format!(
                    "minimal cyclic submodule of C_{} is not a shifted simple",
                    ca.datum.elements[l]
                )));
            };
            row[i].add_term(-g, &BigInt::from(1));
            m = m.quotient(&best)?;
        }
        entries.push(row);
    }
    let name = |l: &usize| ca.datum.elements[*l].clone();
    Ok(DecompMatrix {
        row_names: order.iter().map(name).collect(),
        col_names: cols.iter().map(name).collect(),
        rows: order,
        cols,
        entries,
    })
}
