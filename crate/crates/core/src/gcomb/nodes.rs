use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::params::HeckeParams;

/// A node (r, c, l): row r, column c of component l (all 1-based; r = c = 0
/// is the position of the l-th red string).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i64, i64, usize)", into = "(i64, i64, usize)")]
pub struct Node {
    pub r: i64,
    pub c: i64,
    pub l: usize,
}

impl From<(i64, i64, usize)> for Node {
    fn from((r, c, l): (i64, i64, usize)) -> Self {
        Node { r, c, l }
    }
}

impl From<Node> for (i64, i64, usize) {
    fn from(n: Node) -> Self {
        (n.r, n.c, n.l)
    }
}

impl Node {
    pub fn new(r: i64, c: i64, l: usize) -> Self {
        Node { r, c, l }
    }

    /// Content c − r.
    pub fn content(&self) -> i64 {
        self.c - self.r
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.l)
    }
}

/// Residue ε^b q^a in canonical form: a mod e, b mod p′.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Residue {
    pub a: i64,
    pub b: i64,
}

impl From<[i64; 2]> for Residue {
    fn from([a, b]: [i64; 2]) -> Self {
        Residue { a, b }
    }
}

impl From<Residue> for [i64; 2] {
    fn from(r: Residue) -> Self {
        [r.a, r.b]
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// Normal form of ε^j q^i using ε^{p′} = q^{e′}.
pub fn canonical_residue(i: i64, j: i64, params: &HeckeParams) -> Residue {
    let k = j.div_euclid(params.p_prime);
    let b = j.rem_euclid(params.p_prime);
    Residue { a: (i + k * params.e_prime).rem_euclid(params.e), b }
}

/// Block index a and position b with l = ap + b + 1.
pub fn block_of(l: usize, params: &HeckeParams) -> (usize, usize) {
    let p = params.p as usize;
    ((l - 1) / p, (l - 1) % p)
}

pub fn residue(g: &Node, params: &HeckeParams) -> Residue {
    let (a, b) = block_of(g.l, params);
    canonical_residue(params.rho[a] + g.content(), b as i64, params)
}

/// ε·res.
pub fn eps_times(r: Residue, params: &HeckeParams) -> Residue {
    canonical_residue(r.a, r.b + 1, params)
}

/// q^k·res.
pub fn q_times(r: Residue, k: i64, params: &HeckeParams) -> Residue {
    canonical_residue(r.a + k, r.b, params)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// κ_l − (l−1)/(ℓ+1), the offset of component l before dividing by e.
pub fn red_offset(l: usize, params: &HeckeParams) -> BigRational {
    &params.kappa[l - 1] - frac(l as i64 - 1, params.ell as i64 + 1)
}

/// x(r,c,l) = c − r + (κ_l − (l−1)/(ℓ+1))/e − (r+c)/N.
pub fn loading(g: &Node, params: &HeckeParams) -> BigRational {
    rat(g.content()) + red_offset(g.l, params) / rat(params.e) - frac(g.r + g.c, params.big_n)
}

/// σ(r,c,l): move one step along the block of l, wrapping at multiples of p.
pub fn sigma_node(g: &Node, params: &HeckeParams) -> Node {
    let p = params.p as usize;
    let l = if g.l % p == 0 { g.l + 1 - p } else { g.l + 1 };
    Node { l, ..*g }
}

pub fn sigma_node_pow(g: &Node, k: usize, params: &HeckeParams) -> Node {
    (0..k % params.p as usize).fold(*g, |acc, _| sigma_node(&acc, params))
}

/// All nodes of the bounded node set: 0 ≤ r, c ≤ n, 1 ≤ l ≤ ℓ.
pub fn all_nodes(params: &HeckeParams) -> Vec<Node> {
    let n = params.n as i64;
    let mut out = Vec::new();
    for l in 1..=params.ell {
        for r in 0..=n {
            for c in 0..=n {
                out.push(Node { r, c, l });
            }
        }
    }
    out
}

/// Closed interval 𝔯(a, δ).
pub fn region_interval(a: usize, delta: i64, params: &HeckeParams) -> (BigRational, BigRational) {
    let e = rat(params.e);
    let l1 = rat(params.ell as i64 + 1);
    let p = params.p;
    let rho = rat(params.rho[a]);
    let lo = rat(delta) + (&rho - rat(a as i64 * p) / &l1) / &e - frac(2 * params.n as i64, params.big_n);
    let hi = rat(delta + 1) + (&rho - rat((a as i64 + 1) * p) / &l1) / &e;
    (lo, hi)
}

/// The unique region (a, δ) whose interval contains x(γ), if there is exactly one.
pub fn region_of(g: &Node, params: &HeckeParams) -> Option<(usize, i64)> {
    let x = loading(g, params);
    let n = params.n as i64;
    let mut found = None;
    for a in 0..params.d {
        for delta in -n..=n {
            let (lo, hi) = region_interval(a, delta, params);
            if lo <= x && x <= hi {
                if found.is_some() {
                    return None;
                }
                found = Some((a, delta));
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomb::derive_params;

    #[test]
    fn residues_of_small_nodes() {
        let h = derive_params(3, 2, 1, &[0, 9], false).unwrap();
        assert_eq!(residue(&Node::new(0, 0, 1), &h), Residue { a: 0, b: 0 });
        assert_eq!(residue(&Node::new(1, 2, 2), &h), Residue { a: 1, b: 1 });
    }

    #[test]
    fn case_one_folds_epsilon() {
        // e = p = 2: ε = q, so the second component is shifted by one
        let h = derive_params(2, 2, 2, &[0], true).unwrap();
        assert_eq!(residue(&Node::new(1, 1, 2), &h), Residue { a: 1, b: 0 });
        assert_eq!(eps_times(Residue { a: 1, b: 0 }, &h), Residue { a: 0, b: 0 });
    }

    #[test]
    fn loading_examples() {
        let h = derive_params(2, 2, 2, &[0], true).unwrap();
        assert_eq!(loading(&Node::new(0, 0, 1), &h), rat(0));
        assert_eq!(loading(&Node::new(1, 1, 1), &h), frac(-2, h.big_n));
    }

    #[test]
    fn sigma_wraps_within_block() {
        let h = derive_params(3, 2, 1, &[0, 9], false).unwrap();
        assert_eq!(sigma_node(&Node::new(1, 1, 2), &h), Node::new(1, 1, 1));
        assert_eq!(sigma_node(&Node::new(1, 1, 3), &h), Node::new(1, 1, 4));
        assert_eq!(sigma_node_pow(&Node::new(2, 1, 4), 2, &h), Node::new(2, 1, 4));
    }

    #[test]
    fn sigma_multiplies_residue_by_epsilon() {
        for (e, p, rho) in [(3i64, 2i64, vec![0i64, 9]), (2, 2, vec![0]), (4, 2, vec![0]), (3, 3, vec![0]), (2, 4, vec![0])] {
            let h = derive_params(e, p, 2, &rho, false).unwrap();
            for g in all_nodes(&h) {
                assert_eq!(residue(&sigma_node(&g, &h), &h), eps_times(residue(&g, &h), &h), "{g}");
            }
        }
    }
}
