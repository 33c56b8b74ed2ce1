use serde::{Deserialize, Serialize};

use crate::cellcore::{AxiomCheck, GradedAlgebra, Report, SkewCellDatum};

/// A triple of compatible permutations of the algebra basis, the poset and
/// the tableaux.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftAutomorphism {
    pub sigma_a: Vec<usize>,
    pub sigma_p: Vec<usize>,
    /// sigma_t[l][s] is the index of σ(𝔰) in T(σ_P l).
    pub sigma_t: Vec<Vec<usize>>,
}

/// Checks of a shift automorphism together with the orders of σ_A and σ_P.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftReport {
    pub report: Report,
    pub s_p: usize,
    pub s_big_p: usize,
}

impl ShiftReport {
    pub fn passed(&self) -> bool {
        self.report.all_passed()
    }
}

pub fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    v.iter().all(|&i| i < v.len() && !std::mem::replace(&mut seen[i], true))
}

/// Order of a permutation: lcm of its cycle lengths.
pub fn perm_order(v: &[usize]) -> usize {
    let mut seen = vec![false; v.len()];
    let mut order = 1;
    for i in 0..v.len() {
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = v[j];
            len += 1;
        }
        if len > 0 {
            order = num_integer::lcm(order, len);
        }
    }
    order
}

pub fn perm_pow(v: &[usize], k: usize, i: usize) -> usize {
    (0..k).fold(i, |j, _| v[j])
}

impl ShiftAutomorphism {
    pub fn identity(alg: &GradedAlgebra, d: &SkewCellDatum) -> Self {
        ShiftAutomorphism {
            sigma_a: (0..alg.dim()).collect(),
            sigma_p: (0..d.len()).collect(),
            sigma_t: d.tableaux.iter().map(|t| (0..t.len()).collect()).collect(),
        }
    }

    /// σ_T^k applied to tableau s of cell l; returns (σ_P^k l, index).
    pub fn tab_pow(&self, l: usize, s: usize, k: usize) -> (usize, usize) {
        (0..k).fold((l, s), |(m, t), _| (self.sigma_p[m], self.sigma_t[m][t]))
    }

    pub fn apply_vec(&self, v: &[crate::exactmath::Scalar]) -> Vec<crate::exactmath::Scalar> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.sigma_a[i]] = x.clone();
        }
        out
    }
}

/// Checks every shift-automorphism condition with witnesses and computes
/// s_p = |σ_A| and s_P = |σ_P|.
pub fn verify_shift(alg: &GradedAlgebra, d: &SkewCellDatum, s: &ShiftAutomorphism) -> ShiftReport {
    let mut rep = Report::default();
    let n = alg.dim();
    let np = d.len();
    let shape_ok = s.sigma_a.len() == n
        && is_permutation(&s.sigma_a)
        && s.sigma_p.len() == np
        && is_permutation(&s.sigma_p)
        && s.sigma_t.len() == np
        && (0..np).all(|l| {
            let m = s.sigma_p[l];
            s.sigma_t[l].len() == d.tableaux[l].len()
                && d.tableaux[m].len() == d.tableaux[l].len()
                && is_permutation(&s.sigma_t[l])
        });
    rep.push(AxiomCheck::new("shift.shape", shape_ok, || "σ_A, σ_P or σ_T is not a bijection of the right shape".into()));
    if !shape_ok {
        return ShiftReport { report: rep, s_p: 0, s_big_p: 0 };
    }
    let sa = &s.sigma_a;

    let w = (0..n).find(|&i| alg.deg[sa[i]] != alg.deg[i]).map(|i| format!("σ_A changes the degree of {}", alg.labels[i]));
    rep.push(AxiomCheck::with_witness("shift.degree", w));

    let mut w = None;
    'hom: for i in 0..n {
        for j in 0..n {
            let lhs = s.apply_vec(&alg.mul_basis(i, j));
            let rhs = alg.mul_basis(sa[i], sa[j]);
            if lhs != rhs {
                w = Some(format!("σ({} {}) != σ({}) σ({})", alg.labels[i], alg.labels[j], alg.labels[i], alg.labels[j]));
                break 'hom;
            }
        }
    }
    if w.is_none() && s.apply_vec(&alg.unit) != alg.unit {
        w = Some("σ_A moves the unit".into());
    }
    rep.push(AxiomCheck::with_witness("shift.automorphism", w));

    let w = (0..n)
        .find(|&i| sa[alg.star[i]] != alg.star[sa[i]])
        .map(|i| format!("σ_A does not commute with * at {}", alg.labels[i]));
    rep.push(AxiomCheck::with_witness("shift.star", w));

    let mut w = None;
    'poset: for l in 0..np {
        for m in 0..np {
            if d.above[l][m] != d.above[s.sigma_p[l]][s.sigma_p[m]] {
                w = Some(format!("σ_P does not preserve the order on ({}, {})", d.elements[l], d.elements[m]));
                break 'poset;
            }
        }
    }
    rep.push(AxiomCheck::with_witness("shift.poset", w));

    let mut w = None;
    'a: for l in 0..np {
        let m = s.sigma_p[l];
        for (t, tab) in d.tableaux[l].iter().enumerate() {
            let img = &d.tableaux[m][s.sigma_t[l][t]];
            if img.deg != tab.deg {
                w = Some(format!("deg σ({}) = {} but deg {} = {}", tab.label, img.deg, tab.label, tab.deg));
                break 'a;
            }
        }
    }
    rep.push(AxiomCheck::with_witness("shift.a", w));

    let mut w = None;
    'b: for l in 0..np {
        let m = s.sigma_p[l];
        let k = d.tableaux[l].len();
        for x in 0..k {
            for y in 0..k {
                let b = d.basis_of[l][x][y];
                let want = d.basis_of[m][s.sigma_t[l][x]][s.sigma_t[l][y]];
                if sa[b] != want {
                    w = Some(format!("σ_A({}) = {} but the datum predicts {}", alg.labels[b], alg.labels[sa[b]], alg.labels[want]));
                    break 'b;
                }
            }
        }
    }
    rep.push(AxiomCheck::with_witness("shift.b", w));

    let s_p = perm_order(sa);
    let s_big_p = perm_order(&s.sigma_p);
    let mut w = None;
    'c: for l in 0..np {
        for k in 1..=s_p.max(1) {
            if perm_pow(&s.sigma_p, k, l) != l {
                continue;
            }
            let fixed: Vec<bool> = (0..d.tableaux[l].len()).map(|t| s.tab_pow(l, t, k) == (l, t)).collect();
            if fixed.iter().any(|&f| f) && !fixed.iter().all(|&f| f) {
                w = Some(format!("σ^{k} fixes some but not all tableaux of {}", d.elements[l]));
                break 'c;
            }
        }
    }
    rep.push(AxiomCheck::with_witness("shift.c", w));

    let order_t = {
        let mut o = 1;
        for l in 0..np {
            for t in 0..d.tableaux[l].len() {
                let mut k = 1;
                while s.tab_pow(l, t, k) != (l, t) {
                    k += 1;
                }
                o = num_integer::lcm(o, k);
            }
        }
        o
    };
    rep.push(AxiomCheck::new("shift.orders", s_p % s_big_p == 0 && order_t == s_p, || {
        format!("|σ_A| = {s_p}, |σ_P| = {s_big_p}, |σ_T| = {order_t}")
    }));

    // elements of one σ_P-orbit are pairwise incomparable
    let mut w = None;
    'orbit: for l in 0..np {
        let mut m = s.sigma_p[l];
        while m != l {
            if d.above[l][m] {
                w = Some(format!("{} ⊳ {} in one orbit", d.elements[l], d.elements[m]));
                break 'orbit;
            }
            m = s.sigma_p[m];
        }
    }
    rep.push(AxiomCheck::with_witness("shift.orbit_antichain", w));
    ShiftReport { report: rep, s_p, s_big_p }
}
