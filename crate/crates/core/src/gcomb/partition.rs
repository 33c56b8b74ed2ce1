use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::nodes::{sigma_node, Node};
use super::params::HeckeParams;
use super::CombError;

/// An ℓ-partition. Components are stored without trailing zeros, so the
/// derived ordering is the lexicographic order on zero-padded rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    comps: Vec<Vec<usize>>,
}

impl Multipartition {
    pub fn new(mut comps: Vec<Vec<usize>>) -> Result<Self, CombError> {
        for (i, c) in comps.iter_mut().enumerate() {
            while c.last() == Some(&0) {
                c.pop();
            }
            if c.windows(2).any(|w| w[0] < w[1]) {
                return Err(CombError::BadShape(format!("component {} is not a partition: {c:?}", i + 1)));
            }
        }
        Ok(Multipartition { comps })
    }

    pub fn empty(ell: usize) -> Self {
        Multipartition { comps: vec![Vec::new(); ell] }
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    pub fn ell(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().sum()
    }

    /// Row length λ^{(l)}_r (1-based, 0 beyond the last row).
    pub fn row_len(&self, l: usize, r: i64) -> usize {
        if r < 1 {
            return 0;
        }
        self.comps[l - 1].get(r as usize - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, g: &Node) -> bool {
        g.l >= 1 && g.l <= self.ell() && g.r >= 1 && g.c >= 1 && g.c as usize <= self.row_len(g.l, g.r)
    }

    /// Nodes in the fixed traversal: components left to right, then by
    /// column, then by row.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (li, comp) in self.comps.iter().enumerate() {
            let cols = comp.first().copied().unwrap_or(0);
            for c in 1..=cols {
                for (ri, &len) in comp.iter().enumerate() {
                    if len >= c {
                        out.push(Node::new(ri as i64 + 1, c as i64, li + 1));
                    }
                }
            }
        }
        out
    }

    pub fn add_node(&self, g: &Node) -> Multipartition {
        let mut comps = self.comps.clone();
        let comp = &mut comps[g.l - 1];
        let r = g.r as usize;
        if comp.len() < r {
            comp.resize(r, 0);
        }
        comp[r - 1] += 1;
        Multipartition { comps }
    }

    pub fn remove_node(&self, g: &Node) -> Multipartition {
        let mut comps = self.comps.clone();
        let comp = &mut comps[g.l - 1];
        comp[g.r as usize - 1] -= 1;
        while comp.last() == Some(&0) {
            comp.pop();
        }
        Multipartition { comps }
    }

    /// Addable nodes in traversal order.
    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for l in 1..=self.ell() {
            let rows = self.comps[l - 1].len() as i64;
            for r in (1..=rows + 1).rev() {
                let len = self.row_len(l, r);
                if r == 1 || self.row_len(l, r - 1) > len {
                    out.push(Node::new(r, len as i64 + 1, l));
                }
            }
        }
        out
    }

    /// Removable nodes in traversal order.
    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for l in 1..=self.ell() {
            let rows = self.comps[l - 1].len() as i64;
            for r in (1..=rows).rev() {
                let len = self.row_len(l, r);
                if self.row_len(l, r + 1) < len {
                    out.push(Node::new(r, len as i64, l));
                }
            }
        }
        out
    }

    /// σλ = {σγ : γ ∈ λ}.
    pub fn sigma(&self, params: &HeckeParams) -> Multipartition {
        let mut comps = vec![Vec::new(); self.ell()];
        for l in 1..=self.ell() {
            let target = sigma_node(&Node::new(1, 1, l), params).l;
            comps[target - 1] = self.comps[l - 1].clone();
        }
        Multipartition { comps }
    }

    pub fn sigma_pow(&self, k: usize, params: &HeckeParams) -> Multipartition {
        (0..k % params.p as usize).fold(self.clone(), |acc, _| acc.sigma(params))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|c| {
                if c.is_empty() {
                    "0".to_string()
                } else {
                    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "({})", parts.join("|"))
    }
}

/// Parses `(2,1|0|1)`; parentheses are optional.
impl FromStr for Multipartition {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self, CombError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut comps = Vec::new();
        for part in t.split('|') {
            let mut comp = Vec::new();
            for x in part.split(',') {
                let x = x.trim();
                if x.is_empty() {
                    continue;
                }
                comp.push(x.parse::<usize>().map_err(|_| CombError::BadShape(format!("bad part {x:?} in {s:?}")))?);
            }
            comps.push(comp);
        }
        Multipartition::new(comps)
    }
}

/// Partitions of n, largest first in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for first in (1..=n.min(max)).rev() {
            cur.push(first);
            go(n - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All ℓ-partitions of n: earlier components take as many boxes as
/// possible first, and each component runs through `partitions_of`.
pub fn enumerate_partitions(n: usize, ell: usize) -> Vec<Multipartition> {
    fn go(n: usize, l: usize, ell: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Multipartition>) {
        if l == ell {
            if n == 0 {
                out.push(Multipartition { comps: cur.clone() });
            }
            return;
        }
        let sizes: Vec<usize> = if l + 1 == ell { vec![n] } else { (0..=n).rev().collect() };
        for s in sizes {
            for part in partitions_of(s) {
                cur.push(part);
                go(n - s, l + 1, ell, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 0, ell, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomb::derive_params;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn two_component_listing() {
        let got: Vec<String> = enumerate_partitions(2, 2).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["(2|0)", "(1,1|0)", "(1|1)", "(0|2)", "(0|1,1)"]);
        assert_eq!(enumerate_partitions(0, 3), vec![Multipartition::empty(3)]);
    }

    #[test]
    fn sigma_swaps_components() {
        let h = derive_params(2, 2, 3, &[0], true).unwrap();
        assert_eq!(mp("(2,1|1,1)").sigma(&h), mp("(1,1|2,1)"));
        assert_eq!(mp("(2,1|1,1)").sigma_pow(2, &h), mp("(2,1|1,1)"));
    }

    #[test]
    fn addable_and_removable() {
        let l = mp("(2,1|0)");
        assert_eq!(l.addable(), vec![Node::new(3, 1, 1), Node::new(2, 2, 1), Node::new(1, 3, 1), Node::new(1, 1, 2)]);
        assert_eq!(l.removable(), vec![Node::new(2, 1, 1), Node::new(1, 2, 1)]);
        for g in l.addable() {
            assert_eq!(l.add_node(&g).remove_node(&g), l);
        }
    }

    #[test]
    fn node_traversal_is_column_major() {
        assert_eq!(mp("(2,1)").nodes(), vec![Node::new(1, 1, 1), Node::new(2, 1, 1), Node::new(1, 2, 1)]);
    }
}
