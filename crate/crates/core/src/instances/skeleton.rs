use serde::Serialize;

use crate::cellcore::Tab;
use crate::gcomb::{psig_skeleton, HeckeParams};

/// The combinatorial part of the shifted datum of the fixed-point Hecke
/// algebra: elements (λ, k), the order ⊳_σ, ι_σ(λ,k) = (λ,−k) and the
/// tableau representatives with degrees.
#[derive(Clone, Debug, Serialize)]
pub struct SkeletonExport {
    pub n: usize,
    pub elements: Vec<String>,
    pub above: Vec<Vec<bool>>,
    pub iota: Vec<usize>,
    pub tableaux: Vec<Vec<Tab>>,
}

pub fn skeleton_for_hecke(n: usize, params: &HeckeParams) -> SkeletonExport {
    let sk = psig_skeleton(n, params);
    let elements = sk.elements.iter().map(|&(r, k)| format!("({},{k})", sk.reps[r].lambda)).collect();
    let above = sk.elements.iter().map(|&x| sk.elements.iter().map(|&y| x != y && sk.geq(x, y)).collect()).collect();
    let iota = sk.elements.iter().map(|&x| sk.elements.iter().position(|&y| y == sk.iota(x)).expect("closed under ι")).collect();
    let tableaux = sk
        .elements
        .iter()
        .map(|&(r, _)| {
            let rep = &sk.reps[r];
            rep.tableaux.iter().zip(&rep.degrees).map(|(t, &deg)| Tab { label: t.to_string(), deg }).collect()
        })
        .collect();
    SkeletonExport { n, elements, above, iota, tableaux }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomb::derive_params;

    #[test]
    fn klr_skeleton() {
        let h = derive_params(2, 2, 2, &[0], true).unwrap();
        let s = skeleton_for_hecke(2, &h);
        assert_eq!(s.elements.len(), s.iota.len());
        for (i, &j) in s.iota.iter().enumerate() {
            assert_eq!(s.iota[j], i);
        }
    }
}
