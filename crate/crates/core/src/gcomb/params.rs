use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::CombError;

/// Parameters of the G(ℓ,p,n) setting: quantum characteristic e, the number
/// p of components in each block, the d-charge ρ and the derived multicharge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeParams {
    pub e: i64,
    pub p: i64,
    pub n: usize,
    pub d: usize,
    pub ell: usize,
    pub m: i64,
    pub p_prime: i64,
    pub e_prime: i64,
    pub rho: Vec<i64>,
    #[serde(serialize_with = "ser_rationals")]
    pub kappa: Vec<BigRational>,
    pub big_n: i64,
    pub strict: bool,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for q in v {
        seq.serialize_element(&rational_string(q))?;
    }
    seq.end()
}

/// `num/den` form used in exported files.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn derive_params(e: i64, p: i64, n: usize, rho: &[i64], strict: bool) -> Result<HeckeParams, CombError> {
    if e < 2 || p < 2 || rho.is_empty() {
        return Err(CombError::BadParams(format!("need e >= 2, p >= 2 and a nonempty charge (e={e}, p={p})")));
    }
    let d = rho.len();
    let ell = p as usize * d;
    let m = e.gcd(&p);
    let (p_prime, e_prime) = (p / m, e / m);
    if strict {
        if rho[0] != 0 {
            return Err(CombError::BadDCharge(format!("first entry of the charge must be 0, got {}", rho[0])));
        }
        let gap = (2 * n as i64 + 3) * e;
        for a in 1..d {
            if rho[a] - rho[a - 1] < gap {
                return Err(CombError::BadDCharge(format!(
                    "gap rho[{}] - rho[{}] = {} is below (2n+3)e = {gap}",
                    a + 1,
                    a,
                    rho[a] - rho[a - 1]
                )));
            }
        }
    }
    let mut kappa = Vec::with_capacity(ell);
    for &r in rho {
        for b in 0..p {
            kappa.push(BigRational::from_integer(BigInt::from(r)) + BigRational::new(BigInt::from(b * e_prime), BigInt::from(p_prime)));
        }
    }
    let big_n = 2 * n as i64 * e * p_prime * (ell as i64 + 1) + 1;
    Ok(HeckeParams { e, p, n, d, ell, m, p_prime, e_prime, rho: rho.to_vec(), kappa, big_n, strict })
}

/// Smallest d-charge satisfying the strict gap condition.
pub fn minimal_strict_charge(e: i64, d: usize, n: usize) -> Vec<i64> {
    (0..d as i64).map(|a| a * (2 * n as i64 + 3) * e).collect()
}

impl HeckeParams {
    /// Same parameters with a different rank n (N is recomputed).
    pub fn with_n(&self, n: usize) -> HeckeParams {
        derive_params(self.e, self.p, n, &self.rho, false)
            .map(|mut h| {
                h.strict = self.strict;
                h
            })
            .expect("parameters were already valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn two_block_charge() {
        let h = derive_params(3, 2, 1, &[0, 9], false).unwrap();
        assert_eq!(h.kappa, vec![q(0, 1), q(3, 2), q(9, 1), q(21, 2)]);
        assert_eq!((h.m, h.p_prime, h.e_prime), (1, 2, 3));
        assert!(matches!(derive_params(3, 2, 1, &[0, 9], true), Err(CombError::BadDCharge(_))));
    }

    #[test]
    fn case_one_parameters() {
        let h = derive_params(2, 2, 2, &[0], true).unwrap();
        assert_eq!((h.m, h.p_prime, h.e_prime), (2, 1, 1));
        assert_eq!(h.kappa, vec![q(0, 1), q(1, 1)]);
        assert_eq!(h.big_n, 2 * 2 * 2 * 3 + 1);
    }

    #[test]
    fn coprime_single_block() {
        let h = derive_params(3, 4, 1, &[0], true).unwrap();
        let expect: Vec<BigRational> = (0..4).map(|b| q(3 * b, 4)).collect();
        assert_eq!(h.kappa, expect);
    }

    #[test]
    fn strict_needs_zero_start() {
        assert!(matches!(derive_params(2, 2, 1, &[1], true), Err(CombError::BadDCharge(_))));
        assert!(derive_params(2, 2, 1, &minimal_strict_charge(2, 3, 1), true).is_ok());
    }
}
