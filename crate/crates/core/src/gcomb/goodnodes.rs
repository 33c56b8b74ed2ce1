use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::Serialize;

use super::nodes::{loading, residue, Node, Residue};
use super::params::HeckeParams;
use super::partition::{enumerate_partitions, Multipartition};
use super::CombError;

/// Direction in which the good-node signature is read along the x-axis.
///
/// `Upward` counts addable/removable nodes with larger loading than the
/// candidate and picks the candidate of least loading. `Downward` is the
/// mirror image: it counts nodes of smaller loading and picks the candidate
/// of greatest loading. `Downward` is the default because it labels the
/// simple heads of the cell modules built from this loading.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    Upward,
    #[default]
    Downward,
}

struct Signed {
    node: Node,
    key: BigRational,
    addable: bool,
}

/// Good i-node of λ for the given orientation.
pub fn good_node_oriented(lam: &Multipartition, i: Residue, params: &HeckeParams, orient: Orientation) -> Result<Option<Node>, CombError> {
    if !params.strict {
        return Err(CombError::TiedLoadings("good nodes need strict parameters".into()));
    }
    let sign = match orient {
        Orientation::Upward => BigRational::from_integer(1.into()),
        Orientation::Downward => BigRational::from_integer((-1).into()),
    };
    let mut nodes: Vec<Signed> = Vec::new();
    for (addable, list) in [(true, lam.addable()), (false, lam.removable())] {
        for g in list {
            if residue(&g, params) == i {
                nodes.push(Signed { key: &sign * loading(&g, params), node: g, addable });
            }
        }
    }
    nodes.sort_by(|a, b| a.key.cmp(&b.key));
    if let Some(w) = nodes.windows(2).find(|w| w[0].key == w[1].key) {
        return Err(CombError::TiedLoadings(format!("{} and {} have equal loading", w[0].node, w[1].node)));
    }
    // after sorting, "B beyond A" means a later index
    let weight = |s: &Signed| if s.addable { 1i64 } else { -1 };
    for (ai, a) in nodes.iter().enumerate() {
        if a.addable {
            continue;
        }
        let d_a: i64 = nodes[ai + 1..].iter().map(weight).sum();
        if d_a > 0 {
            continue;
        }
        let mut window = 0i64;
        let mut ok = true;
        for c in &nodes[ai + 1..] {
            if !c.addable && window >= 0 {
                ok = false;
                break;
            }
            window += weight(c);
        }
        if ok {
            return Ok(Some(a.node));
        }
    }
    Ok(None)
}

pub fn good_node(lam: &Multipartition, i: Residue, params: &HeckeParams) -> Result<Option<Node>, CombError> {
    good_node_oriented(lam, i, params, Orientation::default())
}

/// Residues that occur on removable nodes of λ.
pub fn removable_residues(lam: &Multipartition, params: &HeckeParams) -> BTreeSet<Residue> {
    lam.removable().iter().map(|g| residue(g, params)).collect()
}

/// Uglov ℓ-partitions of every size up to n: λ is included iff removing
/// one of its good nodes leaves an Uglov ℓ-partition of size one less.
pub fn uglov_oriented(n: usize, params: &HeckeParams, orient: Orientation) -> Result<Vec<Multipartition>, CombError> {
    let mut prev: BTreeSet<Multipartition> = [Multipartition::empty(params.ell)].into_iter().collect();
    let mut level: Vec<Multipartition> = prev.iter().cloned().collect();
    for m in 1..=n {
        level = Vec::new();
        for lam in enumerate_partitions(m, params.ell) {
            let mut keep = false;
            for i in removable_residues(&lam, params) {
                if let Some(a) = good_node_oriented(&lam, i, params, orient)? {
                    if prev.contains(&lam.remove_node(&a)) {
                        keep = true;
                        break;
                    }
                }
            }
            if keep {
                level.push(lam);
            }
        }
        prev = level.iter().cloned().collect();
    }
    Ok(level)
}

pub fn uglov(n: usize, params: &HeckeParams) -> Result<Vec<Multipartition>, CombError> {
    uglov_oriented(n, params, Orientation::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomb::derive_params;

    #[test]
    fn fixture_uglov() {
        let h = derive_params(2, 2, 2, &[0], true).unwrap();
        let names = |v: Vec<Multipartition>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(names(uglov(0, &h).unwrap()), ["(0|0)"]);
        assert_eq!(names(uglov(1, &h).unwrap()), ["(1|0)", "(0|1)"]);
        assert_eq!(names(uglov(2, &h).unwrap()), ["(1,1|0)", "(0|1,1)"]);
        assert_eq!(names(uglov_oriented(2, &h, Orientation::Upward).unwrap()), ["(2|0)", "(0|2)"]);
    }

    #[test]
    fn non_strict_refuses() {
        let h = derive_params(3, 2, 1, &[0, 9], false).unwrap();
        let r = good_node(&"(1|0|0|0)".parse().unwrap(), Residue { a: 0, b: 0 }, &h);
        assert!(matches!(r, Err(CombError::TiedLoadings(_))));
    }

    #[test]
    fn single_box_is_good() {
        let h = derive_params(3, 2, 1, &[0], true).unwrap();
        let lam: Multipartition = "(1|0)".parse().unwrap();
        assert_eq!(good_node(&lam, Residue { a: 0, b: 0 }, &h).unwrap(), Some(Node::new(1, 1, 1)));
        assert_eq!(good_node(&lam, Residue { a: 1, b: 0 }, &h).unwrap(), None);
    }
}
