use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::nodes::{loading, residue, sigma_node, Node, Residue};
use super::params::HeckeParams;
use super::partition::Multipartition;
use super::CombError;

/// A tableau: a bijection from the nodes of `shape` to {1..n}.
/// `entries[l][r][c]` holds the entry in row r+1, column c+1 of component l+1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Multipartition,
    pub entries: Vec<Vec<Vec<usize>>>,
}

impl Tableau {
    pub fn from_entries(entries: Vec<Vec<Vec<usize>>>) -> Result<Self, CombError> {
        let shape = Multipartition::new(entries.iter().map(|c| c.iter().map(|r| r.len()).collect()).collect())?;
        let t = Tableau { shape, entries };
        let mut seen: Vec<usize> = t.entries.iter().flatten().flatten().copied().collect();
        seen.sort_unstable();
        if seen != (1..=seen.len()).collect::<Vec<_>>() {
            return Err(CombError::BadShape(format!("entries of {t} are not 1..n")));
        }
        Ok(t)
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, g: &Node) -> usize {
        self.entries[g.l - 1][g.r as usize - 1][g.c as usize - 1]
    }

    /// Inverse map k ↦ node, indexed by k − 1.
    pub fn positions(&self) -> Vec<Node> {
        let mut out = vec![Node::new(0, 0, 0); self.size()];
        for g in self.shape.nodes() {
            out[self.entry(&g) - 1] = g;
        }
        out
    }

    pub fn is_standard(&self) -> bool {
        self.shape.nodes().iter().all(|g| {
            let k = self.entry(g);
            let right = Node::new(g.r, g.c + 1, g.l);
            let below = Node::new(g.r + 1, g.c, g.l);
            (!self.shape.contains(&right) || self.entry(&right) > k) && (!self.shape.contains(&below) || self.entry(&below) > k)
        })
    }

    /// Entry sequence in the shape's traversal order; used to pick orbit representatives.
    pub fn reading_word(&self) -> Vec<usize> {
        self.shape.nodes().iter().map(|g| self.entry(g)).collect()
    }

    /// Shape of the restriction to {1..k}.
    pub fn restricted_shape(&self, k: usize) -> Multipartition {
        let comps = self
            .entries
            .iter()
            .map(|comp| comp.iter().map(|row| row.iter().filter(|&&x| x <= k).count()).collect())
            .collect();
        Multipartition::new(comps).expect("restriction of a standard tableau")
    }

    pub fn residue_sequence(&self, params: &HeckeParams) -> Vec<Residue> {
        self.positions().iter().map(|g| residue(g, params)).collect()
    }

    /// σ𝔱 = 𝔱 ∘ σ⁻¹.
    pub fn sigma(&self, params: &HeckeParams) -> Tableau {
        let mut entries = vec![Vec::new(); self.entries.len()];
        for l in 1..=self.entries.len() {
            let target = sigma_node(&Node::new(1, 1, l), params).l;
            entries[target - 1] = self.entries[l - 1].clone();
        }
        Tableau { shape: self.shape.sigma(params), entries }
    }

    pub fn sigma_pow(&self, k: usize, params: &HeckeParams) -> Tableau {
        (0..k % params.p as usize).fold(self.clone(), |acc, _| acc.sigma(params))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .entries
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    "-".to_string()
                } else {
                    comp.iter()
                        .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                        .collect::<Vec<_>>()
                        .join("/")
                }
            })
            .collect();
        write!(f, "({})", comps.join("|"))
    }
}

/// Standard tableaux of shape λ, built by placing 1, 2, … at addable
/// nodes in traversal order.
pub fn enumerate_std(shape: &Multipartition) -> Vec<Tableau> {
    fn go(shape: &Multipartition, cur: &Multipartition, entries: &mut Vec<Vec<Vec<usize>>>, k: usize, out: &mut Vec<Tableau>) {
        if k > shape.size() {
            out.push(Tableau { shape: shape.clone(), entries: entries.clone() });
            return;
        }
        for g in cur.addable() {
            if !shape.contains(&g) {
                continue;
            }
            let comp = &mut entries[g.l - 1];
            if comp.len() < g.r as usize {
                comp.push(Vec::new());
            }
            comp[g.r as usize - 1].push(k);
            go(shape, &cur.add_node(&g), entries, k + 1, out);
            let comp = &mut entries[g.l - 1];
            comp[g.r as usize - 1].pop();
            if comp[g.r as usize - 1].is_empty() {
                comp.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut entries = vec![Vec::new(); shape.ell()];
    go(shape, &Multipartition::empty(shape.ell()), &mut entries, 1, &mut out);
    out
}

/// deg 𝔱 = Σ_k (#Add_k(𝔱) − #Rem_k(𝔱)).
pub fn tableau_degree(t: &Tableau, params: &HeckeParams) -> i64 {
    let pos = t.positions();
    let mut deg = 0i64;
    for k in 1..=t.size() {
        let a = pos[k - 1];
        let (res, x) = (residue(&a, params), loading(&a, params));
        let shape = t.restricted_shape(k);
        let below = |g: &Node| residue(g, params) == res && loading(g, params) < x;
        deg += shape.addable().iter().filter(|g| below(g)).count() as i64;
        deg -= shape.removable().iter().filter(|g| below(g)).count() as i64;
    }
    deg
}

/// Graded count of Std(λ): Σ_𝔱 t^{deg 𝔱}, as degree → multiplicity.
pub fn degree_profile(shape: &Multipartition, params: &HeckeParams) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for t in enumerate_std(shape) {
        *out.entry(tableau_degree(&t, params)).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomb::derive_params;

    fn klr() -> HeckeParams {
        derive_params(2, 2, 2, &[0], true).unwrap()
    }

    fn tab(v: Vec<Vec<Vec<usize>>>) -> Tableau {
        Tableau::from_entries(v).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_std(&"(1|1)".parse().unwrap()).len(), 2);
        assert_eq!(enumerate_std(&"(2,1)".parse().unwrap()).len(), 2);
        assert_eq!(enumerate_std(&"(2,1|1)".parse().unwrap()).len(), 8);
        let empty = enumerate_std(&Multipartition::empty(2));
        assert_eq!(empty.len(), 1);
        assert_eq!(tableau_degree(&empty[0], &klr()), 0);
    }

    #[test]
    fn fixture_degrees() {
        let h = klr();
        let s = tab(vec![vec![vec![1], vec![2]], vec![]]);
        let t = tab(vec![vec![vec![1]], vec![vec![2]]]);
        let u = tab(vec![vec![vec![1, 2]], vec![]]);
        assert_eq!(tableau_degree(&s, &h), 0);
        assert_eq!(tableau_degree(&t, &h), 1);
        assert_eq!(tableau_degree(&u, &h), 2);
        assert_eq!(tableau_degree(&t.sigma(&h), &h), 1);
    }

    #[test]
    fn sigma_tableau_is_standard() {
        let h = derive_params(3, 3, 3, &[0], true).unwrap();
        for t in enumerate_std(&"(2|1|0)".parse().unwrap()) {
            let s = t.sigma(&h);
            assert!(s.is_standard());
            assert_eq!(s.shape, "(0|2|1)".parse().unwrap());
            assert_eq!(t.sigma_pow(3, &h), t);
        }
    }
}
