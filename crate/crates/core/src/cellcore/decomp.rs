use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::cells::{cell_module, p0, simple_module};
use super::datum::CellAlgebra;
use super::module::{GradedModule, HomVec};
use super::CellError;
use crate::exactmath::{span_basis, LaurentPoly, Matrix, Scalar};

/// {a : a·D = 0 for every D in the list}, with a homogeneous basis.
/// Errors unless every simple has scalar endomorphisms, J is nilpotent and
/// dim A/J = Σ (dim D)².
pub fn jacobson_radical(ca: &CellAlgebra, simples: &[GradedModule]) -> Result<Vec<HomVec>, CellError> {
    let alg = &ca.alg;
    let f = alg.field;
    for (i, d) in simples.iter().enumerate() {
        let e = d.hom_dim(d, None);
        if e != 1 {
            return Err(CellError::SplitCheckFailed(format!("simple #{i} has {e}-dimensional endomorphism ring")));
        }
    }
    let mut degs = alg.deg.clone();
    degs.sort_unstable();
    degs.dedup();
    let mut basis = Vec::new();
    for dg in degs {
        let idx: Vec<usize> = (0..alg.dim()).filter(|&i| alg.deg[i] == dg).collect();
        // one equation per matrix entry of Σ x_i action_i, per simple
        let mut rows = Vec::new();
        for d in simples {
            for r in 0..d.dim() {
                for c in 0..d.dim() {
                    let row: Vec<Scalar> = idx.iter().map(|&i| d.action[i].get(r, c).clone()).collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..idx.len()).map(|j| (0..idx.len()).map(|i| if i == j { f.one() } else { f.zero() }).collect()).collect()
        } else {
            Matrix::from_rows(f, rows)?.kernel_basis()
        };
        for v in kernel {
            let mut full = alg.zero_vec();
            for (x, &i) in v.into_iter().zip(&idx) {
                full[i] = x;
            }
            basis.push((full, dg));
        }
    }
    let want: usize = alg.dim() - simples.iter().map(|d| d.dim().pow(2)).sum::<usize>();
    if basis.len() != want {
        return Err(CellError::RadicalCheckFailed(format!("dim J = {} but dim A − Σ dim² = {want}", basis.len())));
    }
    // J^k = 0 for some k ≤ dim A + 1
    let mut power: Vec<Vec<Scalar>> = basis.iter().map(|(v, _)| v.clone()).collect();
    let mut steps = 1;
    while !power.is_empty() {
        if steps > alg.dim() {
            return Err(CellError::RadicalCheckFailed("J is not nilpotent".into()));
        }
        let mut prod = Vec::new();
        for x in &power {
            for (j, _) in &basis {
                let y = alg.mul(x, j);
                if y.iter().any(|c| !c.is_zero()) {
                    prod.push(y);
                }
            }
        }
        power = span_basis(f, alg.dim(), &prod);
        steps += 1;
    }
    Ok(basis)
}

/// Graded decomposition matrix: rows are all of P, columns are P_0, both
/// listed greatest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompMatrix {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub row_names: Vec<String>,
    pub col_names: Vec<String>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl DecompMatrix {
    pub fn entry(&self, l: usize, m: usize) -> Option<&LaurentPoly> {
        let r = self.rows.iter().position(|&x| x == l)?;
        let c = self.cols.iter().position(|&x| x == m)?;
        Some(&self.entries[r][c])
    }

    /// d_{μμ} = 1 and d_{λμ} ≠ 0 only if λ ⊵ μ.
    pub fn is_unitriangular(&self, ca: &CellAlgebra) -> bool {
        self.rows.iter().enumerate().all(|(r, &l)| {
            self.cols.iter().enumerate().all(|(c, &m)| {
                let e = &self.entries[r][c];
                if l == m {
                    e.is_one()
                } else {
                    e.is_zero() || ca.datum.geq(l, m)
                }
            })
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda");
        for c in &self.col_names {
            out.push(',');
            out.push_str(&csv_field(c));
        }
        out.push('\n');
        for (name, row) in self.row_names.iter().zip(&self.entries) {
            out.push_str(&csv_field(name));
            for e in row {
                out.push(',');
                out.push_str(&e.to_string());
            }
            out.push('\n');
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Multiplicities of D_μ⟨k⟩ in C_λ from the radical filtration
/// C_λ ⊇ J C_λ ⊇ J² C_λ ⊇ …. Each layer is semisimple, so the multiplicity
/// of D_μ⟨k⟩ in J^i C / J^{i+1} C is dim Hom^{−k}(J^i C, D_μ).
/// Also returns the ungraded multiplicities, counted with ungraded Homs.
fn cell_row(
    cm: &GradedModule,
    radical: &[HomVec],
    simples: &[GradedModule],
) -> Result<(Vec<LaurentPoly>, Vec<usize>), CellError> {
    let f = cm.field;
    let mut graded = vec![LaurentPoly::zero(); simples.len()];
    let mut plain = vec![0usize; simples.len()];
    let mut layer: Vec<HomVec> = (0..cm.dim())
        .map(|j| {
            let mut v = vec![f.zero(); cm.dim()];
            v[j] = f.one();
            (v, cm.deg[j])
        })
        .collect();
    let mut accounted = 0;
    let mut steps = 0;
    while !layer.is_empty() {
        if steps > cm.dim() {
            return Err(CellError::DecompCheckFailed("radical filtration does not terminate".into()));
        }
        let m = cm.submodule(&layer)?;
        for (idx, d) in simples.iter().enumerate() {
            let mut degs: Vec<i64> = Vec::new();
            for x in &m.deg {
                for y in &d.deg {
                    degs.push(y - x);
                }
            }
            degs.sort_unstable();
            degs.dedup();
            for g in degs {
                let h = m.hom_dim(d, Some(g));
                if h > 0 {
                    graded[idx].add_term(-g, &BigInt::from(h));
                    accounted += h * d.dim();
                }
            }
            plain[idx] += m.hom_dim(d, None);
        }
        layer = cm.image_under(radical, &layer);
        steps += 1;
    }
    if accounted != cm.dim() {
        return Err(CellError::DecompCheckFailed(format!("layers account for dimension {accounted} of {}", cm.dim())));
    }
    Ok((graded, plain))
}

/// The graded decomposition matrix d_{λμ}(t) = Σ_k [C_λ : D_μ⟨k⟩] t^k.
/// Rows run in parallel; the result does not depend on scheduling.
pub fn graded_decomp(ca: &CellAlgebra) -> Result<DecompMatrix, CellError> {
    let order = ca.datum.total_order();
    let cols: Vec<usize> = {
        let p = p0(ca);
        order.iter().copied().filter(|l| p.contains(l)).collect()
    };
    let simples: Vec<GradedModule> = cols.iter().map(|&m| simple_module(ca, m).expect("μ ∈ P_0")).collect();
    let radical = jacobson_radical(ca, &simples)?;
    let rows: Vec<(Vec<LaurentPoly>, Vec<usize>)> =
        order.par_iter().map(|&l| cell_row(&cell_module(ca, l), &radical, &simples)).collect::<Result<_, _>>()?;
    let mut entries = Vec::with_capacity(rows.len());
    for ((graded, plain), &l) in rows.into_iter().zip(&order) {
        for (g, p) in graded.iter().zip(&plain) {
            if g.at_one() != BigInt::from(*p) {
                return Err(CellError::DecompCheckFailed(format!(
                    "row {}: graded count {} but ungraded count {p}",
                    ca.datum.elements[l], g
                )));
            }
        }
        entries.push(graded);
    }
    let name = |l: &usize| ca.datum.elements[*l].clone();
    let dm = DecompMatrix {
        row_names: order.iter().map(name).collect(),
        col_names: cols.iter().map(name).collect(),
        rows: order,
        cols,
        entries,
    };
    if !dm.is_unitriangular(ca) {
        return Err(CellError::DecompCheckFailed("matrix is not unitriangular".into()));
    }
    Ok(dm)
}

/// Sum of d_{λμ}(t)·dim_t D_μ over μ; equals dim_t C_λ.
pub fn row_graded_dim(dm: &DecompMatrix, ca: &CellAlgebra, l: usize) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    let dims: BTreeMap<usize, LaurentPoly> =
        dm.cols.iter().map(|&m| (m, simple_module(ca, m).expect("μ ∈ P_0").graded_dim())).collect();
    for &m in &dm.cols {
        total = total.add(&dm.entry(l, m).expect("row and column exist").mul(&dims[&m]));
    }
    total
}
