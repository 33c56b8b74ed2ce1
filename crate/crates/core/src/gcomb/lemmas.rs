//! Exhaustive checks of the ordering, region and σ-equivariance properties
//! of the loading function on small parameters.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::dominance::{dominates, dominates_tab};
use super::goodnodes::{good_node_oriented, Orientation};
use super::nodes::{
    all_nodes, block_of, eps_times, loading, q_times, red_offset, region_interval, region_of, residue, sigma_node, Node,
};
use super::orbits::{orbit_data, parts_reps, psig_skeleton};
use super::params::HeckeParams;
use super::partition::{enumerate_partitions, Multipartition};
use super::tableau::{enumerate_std, tableau_degree};

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    fn new(name: &str) -> Self {
        LemmaReport { name: name.to_string(), checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn one() -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

fn xcoord_lemma(params: &HeckeParams) -> LemmaReport {
    let mut rep = LemmaReport::new("xcoord");
    let nodes = all_nodes(params);
    let xs: Vec<BigRational> = nodes.iter().map(|g| loading(g, params)).collect();
    for (i, g) in nodes.iter().enumerate() {
        for (j, h) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            let (x, y) = (&xs[i], &xs[j]);
            rep.check(*x != *y && *x != y + one() && *x != y - one(), || format!("(a) {g} vs {h}"));
            let (a, a2) = (block_of(g.l, params).0, block_of(h.l, params).0);
            if a > a2 {
                rep.check(*x > y + one(), || format!("(b) {g} vs {h}"));
            }
            if a == a2 && g.content() > h.content() {
                rep.check(x > y, || format!("(c) {g} vs {h}"));
            }
        }
    }
    rep
}

fn sigma_residue(params: &HeckeParams) -> LemmaReport {
    let mut rep = LemmaReport::new("sigma_residue");
    for g in all_nodes(params) {
        let sg = sigma_node(&g, params);
        rep.check(residue(&sg, params) == eps_times(residue(&g, params), params), || format!("{g} and {sg}"));
    }
    rep
}

fn offsets_increasing(params: &HeckeParams) -> LemmaReport {
    let mut rep = LemmaReport::new("offsets_increasing");
    for l in 1..params.ell {
        rep.check(red_offset(l, params) < red_offset(l + 1, params), || format!("l = {l}"));
    }
    rep
}

fn regions(params: &HeckeParams) -> LemmaReport {
    let mut rep = LemmaReport::new("regions");
    let n = params.n as i64;
    let keys: Vec<(usize, i64)> = (0..params.d).flat_map(|a| (-n..=n).map(move |d| (a, d))).collect();
    for (i, &(a, d)) in keys.iter().enumerate() {
        let (_, hi) = region_interval(a, d, params);
        for &(a2, d2) in &keys[i + 1..] {
            let (lo2, _) = region_interval(a2, d2, params);
            rep.check(hi < lo2, || format!("(a) r({a},{d}) meets r({a2},{d2})"));
        }
    }
    for g in all_nodes(params) {
        let x = loading(&g, params);
        let (ga, _) = block_of(g.l, params);
        for &(a, d) in &keys {
            let (lo, hi) = region_interval(a, d, params);
            let inside = lo <= x && x <= hi;
            let member = ga == a && g.content() == d;
            rep.check(inside == member, || format!("(b) {g} and r({a},{d})"));
            if inside {
                let sx = loading(&sigma_node(&g, params), params);
                rep.check(lo <= sx && sx <= hi, || format!("(d) sigma {g} leaves r({a},{d})"));
                if d < n {
                    let (lo1, hi1) = region_interval(a, d + 1, params);
                    let x1 = &x + one();
                    rep.check(lo1 <= x1 && x1 <= hi1, || format!("(c) {g} shifted out of r({a},{})", d + 1));
                }
            }
        }
        if g.content().abs() <= n {
            rep.check(region_of(&g, params) == Some((ga, g.content())), || format!("region_of {g}"));
        }
    }
    rep
}

fn min_interval_not_red(params: &HeckeParams) -> LemmaReport {
    let mut rep = LemmaReport::new("min_interval_not_red");
    let n = params.n as i64;
    for a in 0..params.d {
        for b in 0..params.p as usize {
            let l = a * params.p as usize + b + 1;
            let red = loading(&Node::new(0, 0, l), params);
            rep.check(region_interval(a, 0, params).0 < red, || format!("(b) r({a},0) at l = {l}"));
            rep.check(region_interval(a, -1, params).0 + one() < red, || format!("(b) r({a},-1) at l = {l}"));
        }
        for d in -n..=n {
            let lo = region_interval(a, d, params).0;
            for l in 1..=params.ell {
                let red = loading(&Node::new(0, 0, l), params);
                rep.check(lo != red && lo != &red - one(), || format!("(c) r({a},{d}) at l = {l}"));
            }
        }
    }
    rep
}

fn node_region0_between_reds(params: &HeckeParams, parts: &[Multipartition]) -> LemmaReport {
    let mut rep = LemmaReport::new("node_region0_between_reds");
    for lam in parts {
        for g in lam.nodes().into_iter().filter(|g| g.content() == 0) {
            let x = loading(&g, params);
            rep.check(x < loading(&Node::new(0, 0, g.l), params), || format!("upper {g} in {lam}"));
            if g.l > 1 {
                rep.check(loading(&Node::new(0, 0, g.l - 1), params) < x, || format!("lower {g} in {lam}"));
            }
        }
    }
    rep
}

fn sigma_nondecreasing(params: &HeckeParams, parts: &[Multipartition]) -> LemmaReport {
    let mut rep = LemmaReport::new("sigma_nondecreasing");
    for lam in parts {
        let nodes = lam.nodes();
        for g in &nodes {
            for h in &nodes {
                if g == h {
                    continue;
                }
                for k in -1i64..=1 {
                    let kk = BigRational::from_integer(BigInt::from(k));
                    if residue(g, params) != q_times(residue(h, params), k, params) {
                        continue;
                    }
                    if loading(g, params) <= loading(h, params) + &kk {
                        continue;
                    }
                    let (sg, sh) = (sigma_node(g, params), sigma_node(h, params));
                    rep.check(loading(&sg, params) > loading(&sh, params) + &kk, || format!("{g}, {h}, k = {k} in {lam}"));
                }
            }
        }
    }
    rep
}

fn dominance_sigma(params: &HeckeParams, parts: &[Multipartition]) -> LemmaReport {
    let mut rep = LemmaReport::new("dominance_sigma");
    for lam in parts {
        for mu in parts.iter().filter(|m| m.size() == lam.size()) {
            let d = dominates(lam, mu, params).unwrap();
            if lam != mu {
                rep.check(!(d && dominates(mu, lam, params).unwrap()), || format!("antisymmetry {lam} {mu}"));
            } else {
                rep.check(d, || format!("reflexive {lam}"));
            }
            if d {
                rep.check(dominates(&lam.sigma(params), &mu.sigma(params), params).unwrap(), || format!("monotone {lam} {mu}"));
            }
        }
    }
    rep
}

fn tableaux_sigma(params: &HeckeParams, parts: &[Multipartition]) -> LemmaReport {
    let mut rep = LemmaReport::new("tableaux_sigma");
    for lam in parts {
        let tabs = enumerate_std(lam);
        for t in &tabs {
            let st = t.sigma(params);
            rep.check(st.is_standard(), || format!("standard {t}"));
            rep.check(tableau_degree(&st, params) == tableau_degree(t, params), || format!("degree {t}"));
            rep.check(t.sigma_pow(params.p as usize, params) == *t, || format!("period {t}"));
        }
        for mu in parts.iter().filter(|m| m.size() == lam.size()) {
            for s in &tabs {
                for t in &enumerate_std(mu) {
                    if dominates_tab(s, t, params).unwrap() {
                        rep.check(dominates_tab(&s.sigma(params), &t.sigma(params), params).unwrap(), || format!("{s} vs {t}"));
                    }
                }
            }
        }
    }
    rep
}

fn orbit_counts(params: &HeckeParams) -> LemmaReport {
    let mut rep = LemmaReport::new("orbits");
    for m in 0..=params.n {
        let total: usize = parts_reps(m, params).iter().map(|l| orbit_data(l, params).0).sum();
        rep.check(total == enumerate_partitions(m, params.ell).len(), || format!("orbit sum at n = {m}"));
        let sk = psig_skeleton(m, params);
        let els = &sk.elements;
        for &x in els {
            for &y in els {
                if x != y {
                    rep.check(!(sk.geq(x, y) && sk.geq(y, x)), || format!("antisymmetry {x:?} {y:?} at n = {m}"));
                }
                for &z in els {
                    if sk.geq(x, y) && sk.geq(y, z) {
                        rep.check(sk.geq(x, z), || format!("transitivity {x:?} {y:?} {z:?} at n = {m}"));
                    }
                }
            }
            rep.check(sk.iota(sk.iota(x)) == x, || format!("iota {x:?}"));
        }
        for r in &sk.reps {
            for k in 1..r.o {
                let s = r.lambda.sigma_pow(k, params);
                let cmp = dominates(&s, &r.lambda, params).unwrap() || dominates(&r.lambda, &s, params).unwrap();
                rep.check(!cmp, || format!("orbit chain {} at k = {k}", r.lambda));
            }
        }
    }
    rep
}

fn good_nodes(params: &HeckeParams, parts: &[Multipartition]) -> LemmaReport {
    let mut rep = LemmaReport::new("good_nodes");
    for orient in [Orientation::Downward, Orientation::Upward] {
        for lam in parts {
            let mut residues: Vec<_> = lam.removable().iter().map(|g| residue(g, params)).collect();
            residues.sort();
            residues.dedup();
            for i in residues {
                let Ok(a) = good_node_oriented(lam, i, params, orient) else {
                    rep.check(false, || format!("tie in {lam}"));
                    continue;
                };
                let Some(a) = a else { continue };
                rep.check(lam.removable().contains(&a) && residue(&a, params) == i, || format!("good node {a} of {lam}"));
                let sl = lam.sigma(params);
                let sa = good_node_oriented(&sl, eps_times(i, params), params, orient).ok().flatten();
                rep.check(sa == Some(sigma_node(&a, params)), || format!("{orient:?} equivariance at {lam}, {i}"));
            }
        }
    }
    rep
}

/// Runs every check on all ℓ-partitions of size at most `params.n`, which
/// must be positive.
pub fn lemma_sweep(params: &HeckeParams) -> Vec<LemmaReport> {
    let parts: Vec<Multipartition> = (0..=params.n).flat_map(|m| enumerate_partitions(m, params.ell)).collect();
    vec![
        xcoord_lemma(params),
        offsets_increasing(params),
        sigma_residue(params),
        regions(params),
        min_interval_not_red(params),
        node_region0_between_reds(params, &parts),
        sigma_nondecreasing(params, &parts),
        dominance_sigma(params, &parts),
        tableaux_sigma(params, &parts),
        orbit_counts(params),
        good_nodes(params, &parts),
    ]
}

/// Reference dominance test: search every bijection λ → μ.
pub fn brute_force_dominates(lam: &Multipartition, mu: &Multipartition, params: &HeckeParams) -> bool {
    let a = lam.nodes();
    let b = mu.nodes();
    if a.len() != b.len() {
        return false;
    }
    fn go(i: usize, a: &[Node], b: &[Node], used: &mut Vec<bool>, params: &HeckeParams) -> bool {
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || residue(&b[j], params) != residue(&a[i], params) || loading(&b[j], params) > loading(&a[i], params) {
                continue;
            }
            used[j] = true;
            if go(i + 1, a, b, used, params) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    go(0, &a, &b, &mut vec![false; b.len()], params)
}
