use serde::{Deserialize, Serialize};

use super::algebra::GradedAlgebra;
use super::report::{AxiomCheck, Report};
use super::CellError;
use crate::exactmath::{Matrix, Scalar};

/// A tableau label with its degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tab {
    pub label: String,
    pub deg: i64,
}

/// Poset, involution, tableaux and the labelling of the ambient basis by
/// triples (λ, 𝔰, 𝔱).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewCellDatum {
    pub elements: Vec<String>,
    /// above[l][m] is l ⊳ m.
    pub above: Vec<Vec<bool>>,
    pub iota: Vec<usize>,
    pub tableaux: Vec<Vec<Tab>>,
    /// iota_tab[l][s] is the index of ι(𝔰) in T(ι(l)).
    pub iota_tab: Vec<Vec<usize>>,
    /// basis_of[l][s][t] is the basis index of c_{𝔰𝔱} in cell l.
    pub basis_of: Vec<Vec<Vec<usize>>>,
}

impl SkewCellDatum {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn geq(&self, l: usize, m: usize) -> bool {
        l == m || self.above[l][m]
    }

    /// ι is the identity on P and on every T(λ).
    pub fn is_cellular(&self) -> bool {
        self.iota.iter().enumerate().all(|(l, &i)| l == i)
            && self.iota_tab.iter().all(|v| v.iter().enumerate().all(|(s, &i)| s == i))
    }

    /// Elements ordered greatest first: a topological sort of ⊳ that always
    /// takes the smallest available id.
    pub fn total_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut done = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&l| !done[l] && (0..n).all(|m| done[m] || !self.above[m][l]))
                .expect("strict partial order has a maximal element");
            done[next] = true;
            out.push(next);
        }
        out
    }

    fn shape_witness(&self, dim: usize) -> Option<String> {
        let n = self.len();
        if self.above.len() != n || self.above.iter().any(|r| r.len() != n) {
            return Some("order matrix is not square over P".into());
        }
        if self.iota.len() != n || self.tableaux.len() != n || self.iota_tab.len() != n || self.basis_of.len() != n {
            return Some("per-element tables have the wrong length".into());
        }
        if self.iota.iter().any(|&i| i >= n) {
            return Some("ι leaves P".into());
        }
        for l in 0..n {
            let k = self.tableaux[l].len();
            if self.basis_of[l].len() != k || self.basis_of[l].iter().any(|r| r.len() != k) {
                return Some(format!("basis map for {} is not |T|×|T|", self.elements[l]));
            }
            if self.basis_of[l].iter().flatten().any(|&b| b >= dim) {
                return Some(format!("basis map for {} leaves the algebra", self.elements[l]));
            }
            if self.iota_tab[l].len() != k || self.iota_tab[l].iter().any(|&s| s >= self.tableaux[self.iota[l]].len()) {
                return Some(format!("ι on T({}) has the wrong shape", self.elements[l]));
            }
        }
        None
    }
}

/// Checks the algebra structure, the poset and involution, and (C1)–(C4).
/// Failures are report entries with a witness.
pub fn verify_skew_datum(alg: &GradedAlgebra, d: &SkewCellDatum) -> Report {
    let mut rep = alg.structure_report();
    if !rep.passed("algebra.shape") {
        return rep;
    }
    let shape = d.shape_witness(alg.dim());
    let shape_ok = shape.is_none();
    rep.push(AxiomCheck::with_witness("datum.shape", shape));
    if !shape_ok {
        return rep;
    }
    let n = d.len();
    let name = |l: usize| d.elements[l].as_str();
    let tab = |l: usize, s: usize| d.tableaux[l][s].label.as_str();

    let mut w = None;
    'order: for a in 0..n {
        if d.above[a][a] {
            w = Some(format!("{} ⊳ {}", name(a), name(a)));
            break;
        }
        for b in 0..n {
            for c in 0..n {
                if d.above[a][b] && d.above[b][c] && !d.above[a][c] {
                    w = Some(format!("{} ⊳ {} ⊳ {} but not {} ⊳ {}", name(a), name(b), name(c), name(a), name(c)));
                    break 'order;
                }
            }
        }
    }
    rep.push(AxiomCheck::with_witness("poset.strict_order", w));

    let mut w = None;
    'iota: for l in 0..n {
        if d.iota[d.iota[l]] != l {
            w = Some(format!("ι² moves {}", name(l)));
            break;
        }
        for m in 0..n {
            if d.above[l][m] != d.above[d.iota[l]][d.iota[m]] {
                w = Some(format!("ι does not preserve the order on ({}, {})", name(l), name(m)));
                break 'iota;
            }
        }
    }
    rep.push(AxiomCheck::with_witness("poset.iota", w));

    let mut w = None;
    'tabs: for l in 0..n {
        let il = d.iota[l];
        if d.tableaux[l].len() != d.tableaux[il].len() {
            w = Some(format!("|T({})| != |T(ι {})|", name(l), name(l)));
            break;
        }
        for s in 0..d.tableaux[l].len() {
            let is = d.iota_tab[l][s];
            if d.iota_tab.get(il).and_then(|v| v.get(is)) != Some(&s) {
                w = Some(format!("ι∘ι moves {} in T({})", tab(l, s), name(l)));
                break 'tabs;
            }
        }
    }
    rep.push(AxiomCheck::with_witness("tableaux.iota", w));

    let mut w = None;
    'c1: for l in 0..n {
        for (s, ts) in d.tableaux[l].iter().enumerate() {
            for (t, tt) in d.tableaux[l].iter().enumerate() {
                let b = d.basis_of[l][s][t];
                if alg.deg[b] != ts.deg + tt.deg {
                    w = Some(format!(
                        "c_({},{}) in cell {} is {} of degree {}, expected {}",
                        ts.label,
                        tt.label,
                        name(l),
                        alg.labels[b],
                        alg.deg[b],
                        ts.deg + tt.deg
                    ));
                    break 'c1;
                }
            }
        }
    }
    rep.push(AxiomCheck::with_witness("C1", w));

    let cell_of = cell_index(d, alg.dim());
    rep.push(AxiomCheck::new("C2", cell_of.is_ok(), || cell_of.clone().err().unwrap_or_default()));
    let Ok(cell_of) = cell_of else {
        rep.push(AxiomCheck::with_witness("C3", Some("not checked: C2 failed".into())));
        rep.push(AxiomCheck::with_witness("C4", Some("not checked: C2 failed".into())));
        return rep;
    };

    rep.push(AxiomCheck::with_witness("C3", check_c3(alg, d, &cell_of)));

    let mut w = None;
    'c4: for l in 0..n {
        for s in 0..d.tableaux[l].len() {
            for t in 0..d.tableaux[l].len() {
                let b = d.basis_of[l][s][t];
                let il = d.iota[l];
                let want = d.basis_of[il][d.iota_tab[l][t]][d.iota_tab[l][s]];
                if alg.star[b] != want {
                    w = Some(format!(
                        "({})* = {} but c_(ι{},ι{}) in cell {} is {}",
                        alg.labels[b],
                        alg.labels[alg.star[b]],
                        tab(l, t),
                        tab(l, s),
                        name(il),
                        alg.labels[want]
                    ));
                    break 'c4;
                }
            }
        }
    }
    rep.push(AxiomCheck::with_witness("C4", w));
    rep
}

/// Inverse of the basis map, or a witness that it is not a bijection.
fn cell_index(d: &SkewCellDatum, dim: usize) -> Result<Vec<(usize, usize, usize)>, String> {
    let mut cell_of: Vec<Option<(usize, usize, usize)>> = vec![None; dim];
    for (l, rows) in d.basis_of.iter().enumerate() {
        for (s, row) in rows.iter().enumerate() {
            for (t, &b) in row.iter().enumerate() {
                if let Some((l2, _, _)) = cell_of[b] {
                    return Err(format!("basis index {b} used twice (cells {} and {})", d.elements[l2], d.elements[l]));
                }
                cell_of[b] = Some((l, s, t));
            }
        }
    }
    cell_of
        .into_iter()
        .enumerate()
        .map(|(b, c)| c.ok_or_else(|| format!("basis index {b} is not a cell element")))
        .collect()
}

fn check_c3(alg: &GradedAlgebra, d: &SkewCellDatum, cell_of: &[(usize, usize, usize)]) -> Option<String> {
    let f = alg.field;
    for a in 0..alg.dim() {
        for l in 0..d.len() {
            let k = d.tableaux[l].len();
            for s in 0..k {
                let mut reference: Option<Vec<Scalar>> = None;
                for t in 0..k {
                    let mut r = vec![f.zero(); k];
                    for (b, c) in &alg.mult[a][d.basis_of[l][s][t]] {
                        let (m, v, w) = cell_of[*b];
                        if d.above[m][l] {
                            continue;
                        }
                        if m != l || w != t {
                            return Some(format!(
                                "{} * {} has the term {} {} outside A^(>{}) + span c_(v,{})",
                                alg.labels[a],
                                alg.labels[d.basis_of[l][s][t]],
                                c,
                                alg.labels[*b],
                                d.elements[l],
                                d.tableaux[l][t].label
                            ));
                        }
                        r[v] = c.clone();
                    }
                    match &reference {
                        None => reference = Some(r),
                        Some(r0) if *r0 != r => {
                            return Some(format!(
                                "coefficients of {} * c_({},t) in cell {} depend on t ({} vs {})",
                                alg.labels[a],
                                d.tableaux[l][s].label,
                                d.elements[l],
                                d.tableaux[l][0].label,
                                d.tableaux[l][t].label
                            ));
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    None
}

/// An algebra together with a datum that passed every check.
#[derive(Clone, Debug)]
pub struct CellAlgebra {
    pub alg: GradedAlgebra,
    pub datum: SkewCellDatum,
    cell_of: Vec<(usize, usize, usize)>,
}

impl CellAlgebra {
    pub fn new(alg: GradedAlgebra, datum: SkewCellDatum) -> Result<Self, CellError> {
        let rep = verify_skew_datum(&alg, &datum);
        if !rep.all_passed() {
            let msg: Vec<String> =
                rep.failures().iter().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())).collect();
            return Err(CellError::DatumNotVerified(msg.join("; ")));
        }
        let cell_of = cell_index(&datum, alg.dim()).expect("C2 passed");
        Ok(CellAlgebra { alg, datum, cell_of })
    }

    pub fn field(&self) -> &'static crate::exactmath::Field {
        self.alg.field
    }

    pub fn cell_of(&self, b: usize) -> (usize, usize, usize) {
        self.cell_of[b]
    }

    pub fn tab_degrees(&self, l: usize) -> Vec<i64> {
        self.datum.tableaux[l].iter().map(|t| t.deg).collect()
    }

    /// The matrix (r_{𝔳𝔰}(a)) for basis element a of the algebra, read off
    /// with reference column t.
    pub fn r_matrix(&self, a: usize, l: usize, t: usize) -> Matrix {
        let d = &self.datum;
        let k = d.tableaux[l].len();
        let mut m = Matrix::zeros(self.alg.field, k, k);
        for s in 0..k {
            for (b, c) in &self.alg.mult[a][d.basis_of[l][s][t]] {
                let (mu, v, _) = self.cell_of[*b];
                if mu == l {
                    m.set(v, s, c.clone());
                }
            }
        }
        m
    }
}
