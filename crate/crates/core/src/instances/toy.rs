use super::AlgebraFile;
use crate::cellcore::{GradedAlgebra, SkewCellDatum, Tab};
use crate::exactmath::{Field, FieldDescriptor};
use crate::shiftfix::ShiftAutomorphism;

/// F[x]/(x^m) × F[y]/(y^m) with deg x = deg y = 2, x* = y, and the skew
/// cell datum with cells (i, k): c_(0,k) = x^k, c_(1,k) = y^k, ι(i,k) = (1−i,k).
/// The shift swaps x and y.
pub fn gen_toy(m: usize, desc: FieldDescriptor) -> Result<AlgebraFile, crate::exactmath::MathError> {
    let f = Field::get(desc)?;
    let n = 2 * m;
    let idx = |i: usize, k: usize| i * m + k;
    let mut labels = Vec::with_capacity(n);
    let mut deg = Vec::with_capacity(n);
    for var in ["x", "y"] {
        for k in 0..m {
            labels.push(format!("{var}^{k}"));
            deg.push(2 * k as i64);
        }
    }
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..2 {
        for a in 0..m {
            for b in 0..m {
                if a + b < m {
                    mult[idx(i, a)][idx(i, b)] = vec![(idx(i, a + b), f.one())];
                }
            }
        }
    }
    let swap: Vec<usize> = (0..n).map(|b| (b + m) % n).collect();
    let mut unit = vec![f.zero(); n];
    unit[idx(0, 0)] = f.one();
    unit[idx(1, 0)] = f.one();
    let alg = GradedAlgebra { field: f, labels, deg, mult, star: swap.clone(), unit };

    let np = 2 * m;
    let elements = (0..np).map(|e| format!("({},{})", e / m, e % m)).collect();
    let above = (0..np).map(|a| (0..np).map(|b| a / m == b / m && a % m > b % m).collect()).collect();
    let datum = SkewCellDatum {
        elements,
        above,
        iota: swap.clone(),
        tableaux: (0..np).map(|e| vec![Tab { label: "t".into(), deg: (e % m) as i64 }]).collect(),
        iota_tab: vec![vec![0]; np],
        basis_of: (0..np).map(|e| vec![vec![e]]).collect(),
    };
    let shift = ShiftAutomorphism { sigma_a: swap.clone(), sigma_p: swap, sigma_t: vec![vec![0]; np] };
    Ok(AlgebraFile { alg, datum: Some(datum), shift: Some(shift), embedding: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellcore::verify_skew_datum;
    use crate::shiftfix::verify_shift;

    #[test]
    fn toy_verifies() {
        for m in 1..=4 {
            let t = gen_toy(m, FieldDescriptor::Rational).unwrap();
            let d = t.datum.as_ref().unwrap();
            assert!(verify_skew_datum(&t.alg, d).all_passed(), "m = {m}");
            let r = verify_shift(&t.alg, d, t.shift.as_ref().unwrap());
            assert!(r.passed());
            assert_eq!((r.s_p, r.s_big_p), (2, 2));
            assert!(!d.is_cellular());
        }
    }
}
