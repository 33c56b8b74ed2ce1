use super::{AlgebraFile, InstanceError};
use crate::cellcore::{GradedAlgebra, SkewCellDatum, Tab};
use crate::exactmath::{Field, FieldDescriptor};
use crate::shiftfix::{is_permutation, ShiftAutomorphism};

/// Mat_n(F) with basis F_ij = E_{i,n+1−j}, deg E_ab = d_a − d_b and
/// E_ab* = E_{n+1−b,n+1−a}. One cell with tableaux 1..n of degrees d_i and
/// c_ij = F_ij. The shift is F_ij ↦ F_{w(i)w(j)} for w in one-line notation
/// (1-based).
pub fn gen_matrix(n: usize, d: &[i64], w: &[usize], desc: FieldDescriptor) -> Result<AlgebraFile, InstanceError> {
    if n == 0 || d.len() != n {
        return Err(InstanceError::BadWeights(format!("expected {n} weights, got {}", d.len())));
    }
    if let Some(i) = (0..n).find(|&i| d[i] + d[n - 1 - i] != 0) {
        return Err(InstanceError::BadWeights(format!("d_{} + d_{} = {} ≠ 0", i + 1, n - i, d[i] + d[n - 1 - i])));
    }
    let w0: Vec<usize> = w.iter().map(|&x| x.wrapping_sub(1)).collect();
    if w.len() != n || !is_permutation(&w0) {
        return Err(InstanceError::BadPermutation(format!("{w:?} is not a permutation of 1..{n}")));
    }
    if let Some(i) = (0..n).find(|&i| w0[n - 1 - i] != n - 1 - w0[i]) {
        return Err(InstanceError::BadPermutation(format!("w({}) ≠ {} − w({})", n - i, n + 1, i + 1)));
    }
    let mut lens = Vec::new();
    let mut seen = vec![false; n];
    for i in 0..n {
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = w0[j];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    if lens.iter().any(|&l| l != lens[0]) {
        return Err(InstanceError::BadPermutation(format!("cycle lengths {lens:?} are not all equal")));
    }
    let f = Field::get(desc).map_err(|e| InstanceError::BadSpec(e.to_string()))?;
    let idx = |i: usize, j: usize| i * n + j;
    let dim = n * n;
    let mut labels = Vec::with_capacity(dim);
    let mut deg = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("F({},{})", i + 1, j + 1));
            deg.push(d[i] + d[j]);
        }
    }
    // F_ij F_kl = δ_{k,n+1−j} F_il
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            let k = n - 1 - j;
            for l in 0..n {
                mult[idx(i, j)][idx(k, l)] = vec![(idx(i, l), f.one())];
            }
        }
    }
    let star = (0..dim).map(|b| idx(b % n, b / n)).collect();
    let mut unit = vec![f.zero(); dim];
    for i in 0..n {
        unit[idx(i, n - 1 - i)] = f.one();
    }
    let alg = GradedAlgebra { field: f, labels, deg, mult, star, unit };
    let datum = SkewCellDatum {
        elements: vec!["*".into()],
        above: vec![vec![false]],
        iota: vec![0],
        tableaux: vec![(0..n).map(|i| Tab { label: (i + 1).to_string(), deg: d[i] }).collect()],
        iota_tab: vec![(0..n).collect()],
        basis_of: vec![(0..n).map(|i| (0..n).map(|j| idx(i, j)).collect()).collect()],
    };
    let shift = ShiftAutomorphism {
        sigma_a: (0..dim).map(|b| idx(w0[b / n], w0[b % n])).collect(),
        sigma_p: vec![0],
        sigma_t: vec![w0],
    };
    Ok(AlgebraFile { alg, datum: Some(datum), shift: Some(shift), embedding: None })
}
