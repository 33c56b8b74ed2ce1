use super::datum::CellAlgebra;
use super::module::{GradedModule, HomVec};
use super::report::{AxiomCheck, Report};
use crate::exactmath::{Matrix, Scalar};

/// The cell module C_λ, read off with the first tableau as reference column.
pub fn cell_module(ca: &CellAlgebra, l: usize) -> GradedModule {
    let action = (0..ca.alg.dim()).map(|a| ca.r_matrix(a, l, 0)).collect();
    GradedModule { field: ca.field(), deg: ca.tab_degrees(l), action }
}

/// G[𝔰][𝔱] = r_{𝔲𝔱}(c_{𝔲𝔰}) for a fixed 𝔲.
pub fn gram_with(ca: &CellAlgebra, l: usize, u: usize) -> Matrix {
    let k = ca.datum.tableaux[l].len();
    let mut g = Matrix::zeros(ca.field(), k, k);
    for s in 0..k {
        let r = ca.r_matrix(ca.datum.basis_of[l][u][s], l, 0);
        for t in 0..k {
            g.set(s, t, r.get(u, t).clone());
        }
    }
    g
}

/// The Gram matrix of φ_λ on the cell basis, computed with 𝔲 = first tableau.
pub fn gram(ca: &CellAlgebra, l: usize) -> Matrix {
    gram_with(ca, l, 0)
}

/// True when every choice of 𝔲 gives the same Gram matrix.
pub fn gram_u_independent(ca: &CellAlgebra, l: usize) -> bool {
    let g = gram(ca, l);
    (1..ca.datum.tableaux[l].len()).all(|u| gram_with(ca, l, u) == g)
}

/// rad C_λ = {y : φ(x, y) = 0 for all x}, with a homogeneous basis.
/// G pairs degree d only with degree −d, so the kernel splits by degree.
pub fn cell_radical(ca: &CellAlgebra, l: usize) -> Vec<HomVec> {
    homogeneous_kernel(&gram(ca, l), &ca.tab_degrees(l))
}

/// Dimension of the left radical {x : φ(x, y) = 0 for all y}. Recorded only.
pub fn left_radical_dim(ca: &CellAlgebra, l: usize) -> usize {
    homogeneous_kernel(&gram(ca, l).transpose(), &ca.tab_degrees(l)).len()
}

fn homogeneous_kernel(g: &Matrix, deg: &[i64]) -> Vec<HomVec> {
    let f = g.field();
    let mut degs: Vec<i64> = deg.to_vec();
    degs.sort_unstable();
    degs.dedup();
    let mut out = Vec::new();
    for d in degs {
        let idx: Vec<usize> = (0..deg.len()).filter(|&i| deg[i] == d).collect();
        let cols: Vec<Vec<Scalar>> = idx.iter().map(|&i| g.column(i)).collect();
        let sub = Matrix::from_columns(f, g.rows(), &cols);
        for v in sub.kernel_basis() {
            let mut full = vec![f.zero(); deg.len()];
            for (x, &i) in v.into_iter().zip(&idx) {
                full[i] = x;
            }
            out.push((full, d));
        }
    }
    out
}

/// D_λ = C_λ / rad C_λ, or None when the form vanishes.
pub fn simple_module(ca: &CellAlgebra, l: usize) -> Option<GradedModule> {
    if gram(ca, l).is_zero() {
        return None;
    }
    let c = cell_module(ca, l);
    Some(c.quotient(&cell_radical(ca, l)).expect("the radical is a graded submodule"))
}

/// The elements λ with φ_λ ≠ 0.
pub fn p0(ca: &CellAlgebra) -> Vec<usize> {
    (0..ca.datum.len()).filter(|&l| !gram(ca, l).is_zero()).collect()
}

/// D_λ* ≅ D_{ι(λ)} via a degree-0 isomorphism: equal graded dimensions and
/// a nonzero degree-0 intertwiner between simples.
pub fn dual_simple_check(ca: &CellAlgebra, l: usize) -> bool {
    let (Some(d), Some(di)) = (simple_module(ca, l), simple_module(ca, ca.datum.iota[l])) else {
        return false;
    };
    let dual = d.dual(&ca.alg);
    dual.graded_dim() == di.graded_dim() && dual.hom_dim(&di, Some(0)) >= 1
}

/// Properties (a)–(d) of the bilinear forms on every cell, plus
/// independence of 𝔲 and the submodule property of the radical.
pub fn phi_property_suite(ca: &CellAlgebra) -> Report {
    let d = &ca.datum;
    let alg = &ca.alg;
    let f = ca.field();
    let n = d.len();
    let grams: Vec<Matrix> = (0..n).map(|l| gram(ca, l)).collect();
    let cells: Vec<GradedModule> = (0..n).map(|l| cell_module(ca, l)).collect();
    let name = |l: usize| d.elements[l].as_str();
    let tab = |l: usize, s: usize| d.tableaux[l][s].label.as_str();
    let mut rep = Report::default();

    let w = (0..n).find(|&l| !gram_u_independent(ca, l)).map(|l| format!("Gram of {} depends on u", name(l)));
    rep.push(AxiomCheck::with_witness("phi.u_independent", w));

    let mut w = None;
    'a: for l in 0..n {
        let il = d.iota[l];
        let k = d.tableaux[l].len();
        for s in 0..k {
            for t in 0..k {
                if grams[l].get(s, t) != grams[il].get(d.iota_tab[l][t], d.iota_tab[l][s]) {
                    w = Some(format!("cell {}: φ({},{}) != φ(ι{},ι{})", name(l), tab(l, s), tab(l, t), tab(l, t), tab(l, s)));
                    break 'a;
                }
            }
        }
    }
    rep.push(AxiomCheck::with_witness("phi.a", w));

    let mut w = None;
    'b: for l in 0..n {
        let il = d.iota[l];
        let k = d.tableaux[l].len();
        let (g, gi) = (&grams[l], &grams[il]);
        for a in 0..alg.dim() {
            let ra = &cells[l].action[a];
            let rs = &cells[il].action[alg.star[a]];
            for s in 0..k {
                for t in 0..k {
                    let mut lhs = f.zero();
                    for v in 0..k {
                        lhs = &lhs + &(g.get(s, v) * ra.get(v, t));
                    }
                    let (is, it) = (d.iota_tab[l][s], d.iota_tab[l][t]);
                    let mut rhs = f.zero();
                    for x in 0..k {
                        rhs = &rhs + &(rs.get(x, is) * gi.get(it, x));
                    }
                    if lhs != rhs {
                        w = Some(format!("cell {}: a = {}, x = {}, y = {}", name(l), alg.labels[a], tab(l, s), tab(l, t)));
                        break 'b;
                    }
                }
            }
        }
    }
    rep.push(AxiomCheck::with_witness("phi.b", w));

    let mut w = None;
    'c: for l in 0..n {
        let k = d.tableaux[l].len();
        for u in 0..k {
            for s in 0..k {
                let m = &cells[l].action[d.basis_of[l][u][s]];
                for t in 0..k {
                    for v in 0..k {
                        let want = if v == u { grams[l].get(s, t).clone() } else { f.zero() };
                        if *m.get(v, t) != want {
                            w = Some(format!("cell {}: c_({},{}) on c_{}", name(l), tab(l, u), tab(l, s), tab(l, t)));
                            break 'c;
                        }
                    }
                }
            }
        }
    }
    rep.push(AxiomCheck::with_witness("phi.c", w));

    let mut w = None;
    'd: for l in 0..n {
        let k = d.tableaux[l].len();
        for s in 0..k {
            for t in 0..k {
                if !grams[l].get(s, t).is_zero() && d.tableaux[l][s].deg + d.tableaux[l][t].deg != 0 {
                    w = Some(format!("cell {}: φ({},{}) ≠ 0 in degree {}", name(l), tab(l, s), tab(l, t), d.tableaux[l][s].deg + d.tableaux[l][t].deg));
                    break 'd;
                }
            }
        }
    }
    rep.push(AxiomCheck::with_witness("phi.d", w));

    let w = (0..n)
        .find(|&l| cells[l].submodule(&cell_radical(ca, l)).is_err())
        .map(|l| format!("rad C_{} is not a submodule", name(l)));
    rep.push(AxiomCheck::with_witness("phi.radical_submodule", w));
    rep
}
