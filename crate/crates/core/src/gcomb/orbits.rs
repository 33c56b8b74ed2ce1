use serde::Serialize;

use super::dominance::dominates;
use super::params::HeckeParams;
use super::partition::{enumerate_partitions, Multipartition};
use super::tableau::{enumerate_std, tableau_degree, Tableau};

/// (o_λ, p_λ): the ⟨σ⟩-orbit size of λ and p/o_λ.
pub fn orbit_data(lam: &Multipartition, params: &HeckeParams) -> (usize, usize) {
    let p = params.p as usize;
    let o = (1..=p).find(|&k| lam.sigma_pow(k, params) == *lam).expect("σ^p = 1");
    (o, p / o)
}

/// The ⟨σ⟩-orbit of λ, starting at λ.
pub fn orbit(lam: &Multipartition, params: &HeckeParams) -> Vec<Multipartition> {
    let (o, _) = orbit_data(lam, params);
    (0..o).map(|k| lam.sigma_pow(k, params)).collect()
}

/// Lexicographically least member of each ⟨σ⟩-orbit on Parts(n).
pub fn parts_reps(n: usize, params: &HeckeParams) -> Vec<Multipartition> {
    enumerate_partitions(n, params.ell)
        .into_iter()
        .filter(|lam| orbit(lam, params).iter().all(|m| lam <= m))
        .collect()
}

/// Representative of λ's orbit.
pub fn orbit_rep(lam: &Multipartition, params: &HeckeParams) -> (Multipartition, usize) {
    let orb = orbit(lam, params);
    let (k, rep) = orb.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)).unwrap();
    // lam = σ^{o-k} rep
    (rep.clone(), (orb.len() - k) % orb.len())
}

/// Orbits of ⟨σ^{o_λ}⟩ on Std(λ), each listed from its representative
/// (least reading word) as 𝔱, σ^{o_λ}𝔱, σ^{2o_λ}𝔱, …; sorted by representative.
pub fn std_orbits(lam: &Multipartition, params: &HeckeParams) -> Vec<Vec<Tableau>> {
    let (o, _) = orbit_data(lam, params);
    let mut out: Vec<Vec<Tableau>> = Vec::new();
    let all = enumerate_std(lam);
    let mut seen = std::collections::HashSet::new();
    let mut sorted = all.clone();
    sorted.sort_by_key(|t| t.reading_word());
    for t in sorted {
        if seen.contains(&t) {
            continue;
        }
        let mut orb = vec![t.clone()];
        loop {
            let next = orb.last().unwrap().sigma_pow(o, params);
            if next == t {
                break;
            }
            orb.push(next);
        }
        for s in &orb {
            seen.insert(s.clone());
        }
        out.push(orb);
    }
    out
}

/// Std_σ(λ): one tableau per ⟨σ^{o_λ}⟩-orbit.
pub fn std_reps(lam: &Multipartition, params: &HeckeParams) -> Vec<Tableau> {
    std_orbits(lam, params).into_iter().map(|o| o[0].clone()).collect()
}

/// Common ⟨σ^{o_λ}⟩-orbit size on Std(λ), or None if the orbit sizes differ.
pub fn tableau_orbit_size(lam: &Multipartition, params: &HeckeParams) -> Option<usize> {
    let orbs = std_orbits(lam, params);
    let first = orbs.first().map(|o| o.len())?;
    orbs.iter().all(|o| o.len() == first).then_some(first)
}

#[derive(Clone, Debug, Serialize)]
pub struct SkeletonRep {
    pub lambda: Multipartition,
    pub o: usize,
    pub p_lambda: usize,
    /// Common orbit size of σ^{o_λ} on Std(λ); the index k runs mod this.
    pub tilde_o: usize,
    pub tableaux: Vec<Tableau>,
    pub degrees: Vec<i64>,
}

/// Combinatorial skeleton of the skew cell datum of the fixed-point algebra:
/// elements (λ, k) with λ an orbit representative and k mod õ_λ.
#[derive(Clone, Debug, Serialize)]
pub struct PsigSkeleton {
    pub n: usize,
    pub reps: Vec<SkeletonRep>,
    /// (index into reps, k).
    pub elements: Vec<(usize, usize)>,
    /// above[i][j]: reps[i] ▷_σ reps[j], i.e. some σ^k λ_i ▷ λ_j.
    pub above: Vec<Vec<bool>>,
}

impl PsigSkeleton {
    /// (λ,k) ⊵ (μ,l) iff equal or λ ▷_σ μ.
    pub fn geq(&self, x: (usize, usize), y: (usize, usize)) -> bool {
        x == y || self.above[x.0][y.0]
    }

    pub fn iota(&self, x: (usize, usize)) -> (usize, usize) {
        let m = self.reps[x.0].tilde_o;
        (x.0, (m - x.1 % m) % m)
    }

    pub fn rep_index(&self, lam: &Multipartition) -> Option<usize> {
        self.reps.iter().position(|r| r.lambda == *lam)
    }
}

/// λ ▷_σ μ: some σ^k λ strictly dominates μ.
pub fn sigma_strictly_dominates(lam: &Multipartition, mu: &Multipartition, params: &HeckeParams) -> bool {
    (0..params.p as usize).any(|k| {
        let s = lam.sigma_pow(k, params);
        s != *mu && dominates(&s, mu, params).expect("equal sizes")
    })
}

pub fn psig_skeleton(n: usize, params: &HeckeParams) -> PsigSkeleton {
    let lams = parts_reps(n, params);
    let mut reps = Vec::with_capacity(lams.len());
    for lam in &lams {
        let (o, p_lambda) = orbit_data(lam, params);
        let tableaux = std_reps(lam, params);
        let tilde_o = tableau_orbit_size(lam, params).expect("uniform tableau orbits");
        let degrees = tableaux.iter().map(|t| tableau_degree(t, params)).collect();
        reps.push(SkeletonRep { lambda: lam.clone(), o, p_lambda, tilde_o, tableaux, degrees });
    }
    let above = lams
        .iter()
        .map(|a| lams.iter().map(|b| a != b && sigma_strictly_dominates(a, b, params)).collect())
        .collect();
    let elements = reps.iter().enumerate().flat_map(|(i, r)| (0..r.tilde_o).map(move |k| (i, k))).collect();
    PsigSkeleton { n, reps, elements, above }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomb::derive_params;

    #[test]
    fn fixture_orbits() {
        let h = derive_params(2, 2, 2, &[0], true).unwrap();
        assert_eq!(orbit_data(&"(1|1)".parse().unwrap(), &h), (1, 2));
        assert_eq!(orbit_data(&"(2|0)".parse().unwrap(), &h), (2, 1));
        let sk = psig_skeleton(2, &h);
        let names: Vec<String> = sk.reps.iter().map(|r| r.lambda.to_string()).collect();
        assert_eq!(names, ["(1|1)", "(0|2)", "(0|1,1)"]);
        assert_eq!(sk.elements.len(), 4);
        let i = sk.rep_index(&"(1|1)".parse().unwrap()).unwrap();
        assert_eq!(sk.reps[i].tilde_o, 2);
        assert_eq!(sk.reps[i].degrees, vec![1]);
        assert_eq!(sk.iota((i, 1)), (i, 1));
        assert_eq!(sk.iota((i, 0)), (i, 0));
    }

    #[test]
    fn empty_skeleton() {
        let h = derive_params(3, 2, 0, &[0], true).unwrap();
        let sk = psig_skeleton(0, &h);
        assert_eq!(sk.elements, vec![(0, 0)]);
    }

    #[test]
    fn iota_negates_mod_three() {
        let h = derive_params(3, 3, 3, &[0], true).unwrap();
        let sk = psig_skeleton(3, &h);
        let i = sk.rep_index(&"(1|1|1)".parse().unwrap()).unwrap();
        assert_eq!((sk.reps[i].o, sk.reps[i].tilde_o), (1, 3));
        assert_eq!(sk.reps[i].tableaux.len(), 2);
        assert_eq!(sk.iota((i, 1)), (i, 2));
        assert!(sk.rep_index(&"(1|1|0)".parse().unwrap()).is_none());
    }
}
