use serde::Serialize;

use super::fixed::fixed_point_datum;
use super::shift::{verify_shift, ShiftAutomorphism};
use super::ShiftError;
use crate::cellcore::{graded_decomp, AxiomCheck, CellAlgebra, DecompMatrix, Report};
use crate::exactmath::{Field, FieldDescriptor, LaurentPoly};

/// D_F = D_Q · A_F for the fixed-point algebras over the characteristic-0
/// field and its reduction modulo c.
#[derive(Clone, Debug, Serialize)]
pub struct Adjustment {
    pub d_q: DecompMatrix,
    pub d_f: DecompMatrix,
    /// Rows are the columns of D_Q, columns are the columns of D_F.
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub row_names: Vec<String>,
    pub col_names: Vec<String>,
    pub entries: Vec<Vec<LaurentPoly>>,
    pub report: Report,
}

impl Adjustment {
    pub fn entry(&self, r: usize, c: usize) -> Option<&LaurentPoly> {
        let i = self.rows.iter().position(|&x| x == r)?;
        let j = self.cols.iter().position(|&x| x == c)?;
        Some(&self.entries[i][j])
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("mu");
        for c in &self.col_names {
            out.push(',');
            out.push_str(&format!("\"{c}\""));
        }
        out.push('\n');
        for (name, row) in self.row_names.iter().zip(&self.entries) {
            out.push_str(&format!("\"{name}\""));
            for e in row {
                out.push(',');
                out.push_str(&e.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// The modular reduction field for a characteristic-0 field of the tower.
fn reduction_field(f: &'static Field, c: u64) -> Result<&'static Field, ShiftError> {
    let desc = match f.descriptor() {
        FieldDescriptor::Rational => FieldDescriptor::PrimeField(c),
        FieldDescriptor::Cyclotomic(p) => FieldDescriptor::CyclotomicOverPrime(p, c),
        other => return Err(ShiftError::NotIntegral(format!("{other} is not a characteristic-0 field"))),
    };
    Ok(Field::get(desc)?)
}

/// Computes A_F by back-substitution through the unitriangular part of D_Q
/// and checks the equation, unit diagonal, triangularity, nonnegativity,
/// bar symmetry and ι-stability of both P_0 sets.
pub fn adjustment(ca: &CellAlgebra, sh: &ShiftAutomorphism, c: u64) -> Result<Adjustment, ShiftError> {
    let alg = &ca.alg;
    for (i, row) in alg.mult.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if let Some((_, x)) = v.iter().find(|(_, x)| !x.is_integral()) {
                return Err(ShiftError::NotIntegral(format!("{} {} has coefficient {x}", alg.labels[i], alg.labels[j])));
            }
        }
    }
    if let Some(x) = alg.unit.iter().find(|x| !x.is_integral()) {
        return Err(ShiftError::NotIntegral(format!("unit coefficient {x}")));
    }
    let s_p = verify_shift(alg, &ca.datum, sh).s_p.max(1);
    let fq = ca.field();
    let ff = reduction_field(fq, c)?;
    let fp_q = fixed_point_datum(ca, sh, &fq.root_of_unity(s_p as u32)?)?;
    let ca_f = CellAlgebra::new(alg.base_change(ff)?, ca.datum.clone())?;
    let fp_f = fixed_point_datum(&ca_f, sh, &ff.root_of_unity(s_p as u32)?)?;
    let d_q = graded_decomp(&fp_q.fixed)?;
    let d_f = graded_decomp(&fp_f.fixed)?;
    let datum = &fp_q.fixed.datum;

    // D_Q restricted to rows P_0^Q is upper unitriangular in the total order
    let rows = d_q.cols.clone();
    let cols = d_f.cols.clone();
    let n = rows.len();
    let mut entries = vec![vec![LaurentPoly::zero(); cols.len()]; n];
    for (j, &rho) in cols.iter().enumerate() {
        for i in (0..n).rev() {
            let nu = rows[i];
            let mut v = d_f.entry(nu, rho).cloned().ok_or_else(|| ShiftError::SolveFailed(format!("row {} missing", datum.elements[nu])))?;
            for (i2, &nu2) in rows.iter().enumerate().skip(i + 1) {
                let dq = d_q.entry(nu, nu2).expect("row and column exist");
                v = v.sub(&dq.mul(&entries[i2][j]));
            }
            if !d_q.entry(nu, nu).is_some_and(|x| x.is_one()) {
                return Err(ShiftError::SolveFailed(format!("D_Q has no unit at {}", datum.elements[nu])));
            }
            entries[i][j] = v;
        }
    }

    let mut rep = Report::default();
    let mut w = None;
    'eq: for &l in &d_f.rows {
        for (j, &rho) in cols.iter().enumerate() {
            let mut s = LaurentPoly::zero();
            for (i, &nu) in rows.iter().enumerate() {
                s = s.add(&d_q.entry(l, nu).expect("row exists").mul(&entries[i][j]));
            }
            if Some(&s) != d_f.entry(l, rho) {
                w = Some(format!("(D_Q A_F) at ({}, {}) is {s}", datum.elements[l], datum.elements[rho]));
                break 'eq;
            }
        }
    }
    let solved = w.is_none();
    rep.push(AxiomCheck::with_witness("adjust.equation", w));

    let w = cols.iter().enumerate().find_map(|(j, &rho)| match rows.iter().position(|&r| r == rho) {
        Some(i) if entries[i][j].is_one() => None,
        Some(i) => Some(format!("α at {} is {}", datum.elements[rho], entries[i][j])),
        None => Some(format!("{} is in P_0 over F but not over Q", datum.elements[rho])),
    });
    rep.push(AxiomCheck::with_witness("adjust.diagonal", w));

    let mut tri = None;
    let mut neg = None;
    for (i, &nu) in rows.iter().enumerate() {
        for (j, &rho) in cols.iter().enumerate() {
            let e = &entries[i][j];
            if tri.is_none() && !e.is_zero() && !datum.geq(nu, rho) {
                tri = Some(format!("α({}, {}) = {e} but {} ⋭ {}", datum.elements[nu], datum.elements[rho], datum.elements[nu], datum.elements[rho]));
            }
            if neg.is_none() && !e.is_nonnegative() {
                neg = Some(format!("α({}, {}) = {e}", datum.elements[nu], datum.elements[rho]));
            }
        }
    }
    rep.push(AxiomCheck::with_witness("adjust.triangular", tri));
    rep.push(AxiomCheck::with_witness("adjust.nonnegative", neg));

    let stable = |p: &[usize]| p.iter().all(|&l| p.contains(&datum.iota[l]));
    rep.push(AxiomCheck::new("adjust.p0_iota_stable", stable(&rows) && stable(&cols), || "P_0 is not ι-stable".into()));

    let mut w = None;
    if stable(&rows) && stable(&cols) {
        'bar: for (i, &nu) in rows.iter().enumerate() {
            for (j, &rho) in cols.iter().enumerate() {
                let ii = rows.iter().position(|&r| r == datum.iota[nu]).expect("stable");
                let jj = cols.iter().position(|&r| r == datum.iota[rho]).expect("stable");
                if entries[ii][jj] != entries[i][j].bar() {
                    w = Some(format!("α(ι{}, ι{}) != bar α({}, {})", datum.elements[nu], datum.elements[rho], datum.elements[nu], datum.elements[rho]));
                    break 'bar;
                }
            }
        }
    } else {
        w = Some("not checked: P_0 is not ι-stable".into());
    }
    rep.push(AxiomCheck::with_witness("adjust.bar_symmetric", w));

    if !solved {
        let msg = rep.failures().iter().map(|c| c.witness.clone().unwrap_or_default()).collect::<Vec<_>>().join("; ");
        return Err(ShiftError::SolveFailed(msg));
    }
    let name = |l: &usize| datum.elements[*l].clone();
    Ok(Adjustment {
        row_names: rows.iter().map(name).collect(),
        col_names: cols.iter().map(name).collect(),
        rows,
        cols,
        entries,
        report: rep,
        d_q,
        d_f,
    })
}
