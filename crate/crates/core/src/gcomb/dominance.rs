use std::collections::BTreeMap;

use num_rational::BigRational;

use super::nodes::{loading, residue, Residue};
use super::params::HeckeParams;
use super::partition::Multipartition;
use super::tableau::Tableau;
use super::CombError;

/// Loadings of λ grouped by residue, each list sorted ascending.
pub fn loadings_by_residue(lam: &Multipartition, params: &HeckeParams) -> BTreeMap<Residue, Vec<BigRational>> {
    let mut out: BTreeMap<Residue, Vec<BigRational>> = BTreeMap::new();
    for g in lam.nodes() {
        out.entry(residue(&g, params)).or_default().push(loading(&g, params));
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// λ ⊵ μ: some residue-preserving bijection θ: λ → μ has x(θγ) ≤ x(γ).
/// Within a residue class this holds iff the sorted μ-loadings are
/// pointwise at most the sorted λ-loadings.
pub fn dominates(lam: &Multipartition, mu: &Multipartition, params: &HeckeParams) -> Result<bool, CombError> {
    if lam.size() != mu.size() {
        return Err(CombError::SizeMismatch(lam.size(), mu.size()));
    }
    let (a, b) = (loadings_by_residue(lam, params), loadings_by_residue(mu, params));
    if a.len() != b.len() {
        return Ok(false);
    }
    for (res, xs) in &a {
        let Some(ys) = b.get(res) else { return Ok(false) };
        if xs.len() != ys.len() || xs.iter().zip(ys).any(|(x, y)| y > x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// 𝔰 ⊵ 𝔱 iff Shape(𝔰↓k) ⊵ Shape(𝔱↓k) for every k.
pub fn dominates_tab(s: &Tableau, t: &Tableau, params: &HeckeParams) -> Result<bool, CombError> {
    if s.size() != t.size() {
        return Err(CombError::SizeMismatch(s.size(), t.size()));
    }
    for k in 1..=s.size() {
        if !dominates(&s.restricted_shape(k), &t.restricted_shape(k), params)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomb::{derive_params, enumerate_partitions};

    #[test]
    fn size_mismatch() {
        let h = derive_params(2, 2, 2, &[0], true).unwrap();
        let r = dominates(&"(1|0)".parse().unwrap(), &"(1|1)".parse().unwrap(), &h);
        assert_eq!(r, Err(CombError::SizeMismatch(1, 2)));
    }

    #[test]
    fn fixture_order() {
        let h = derive_params(2, 2, 2, &[0], true).unwrap();
        let p = |s: &str| s.parse::<Multipartition>().unwrap();
        // the (1,1|0) cell sits at the bottom of its residue class
        assert!(dominates(&p("(2|0)"), &p("(1,1|0)"), &h).unwrap());
        assert!(!dominates(&p("(1,1|0)"), &p("(2|0)"), &h).unwrap());
        for l in enumerate_partitions(2, 2) {
            assert!(dominates(&l, &l, &h).unwrap());
        }
    }
}
