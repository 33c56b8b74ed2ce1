//! Dense univariate polynomial helpers over ℚ and 𝔽_c.
//!
//! Polynomials are coefficient vectors, constant term first. Trailing zeros
//! are trimmed by [`trim`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient arithmetic used by the polynomial routines.
pub(crate) trait Coef {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Rat;

#[derive(Clone, Copy, Debug)]
pub(crate) struct ModC(pub u64);

impl Coef for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

impl ModC {
    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &a);
            }
            a = self.mul(&a, &a);
            e >>= 1;
        }
        acc
    }
}

impl Coef for ModC {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.0 as u128 - *b as u128) % self.0 as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        // c is prime, so a^(c-2) is the inverse
        self.pow(*a, self.0 - 2)
    }
}

pub(crate) fn trim<R: Coef>(r: &R, mut a: Vec<R::E>) -> Vec<R::E> {
    while a.last().is_some_and(|x| r.is_zero(x)) {
        a.pop();
    }
    a
}

pub(crate) fn mul<R: Coef>(r: &R, a: &[R::E], b: &[R::E]) -> Vec<R::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![r.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = r.add(&out[i + j], &r.mul(x, y));
        }
    }
    trim(r, out)
}

/// Quotient and remainder of `a` by the nonzero polynomial `m`.
pub(crate) fn divrem<R: Coef>(r: &R, a: &[R::E], m: &[R::E]) -> (Vec<R::E>, Vec<R::E>) {
    let m = trim(r, m.to_vec());
    assert!(!m.is_empty(), "division by the zero polynomial");
    let mut rem = trim(r, a.to_vec());
    if rem.len() < m.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = r.inv(m.last().unwrap());
    let mut quot = vec![r.zero(); rem.len() - m.len() + 1];
    while rem.len() >= m.len() {
        let shift = rem.len() - m.len();
        let f = r.mul(rem.last().unwrap(), &lead_inv);
        for (j, mj) in m.iter().enumerate() {
            rem[shift + j] = r.sub(&rem[shift + j], &r.mul(&f, mj));
        }
        quot[shift] = f;
        rem.pop();
        rem = trim(r, rem);
    }
    (trim(r, quot), rem)
}

pub(crate) fn rem<R: Coef>(r: &R, a: &[R::E], m: &[R::E]) -> Vec<R::E> {
    divrem(r, a, m).1
}

/// Inverse of `a` modulo `m`, or `None` when they share a factor.
pub(crate) fn inv_mod<R: Coef>(r: &R, a: &[R::E], m: &[R::E]) -> Option<Vec<R::E>> {
    // extended Euclid tracking only the coefficient of a
    let mut r0 = trim(r, m.to_vec());
    let mut r1 = rem(r, a, m);
    let mut t0: Vec<R::E> = Vec::new();
    let mut t1: Vec<R::E> = vec![r.one()];
    while !r1.is_empty() {
        let (q, rr) = divrem(r, &r0, &r1);
        let qt = mul(r, &q, &t1);
        let len = t0.len().max(qt.len());
        let mut t2 = Vec::with_capacity(len);
        for i in 0..len {
            let x = t0.get(i).cloned().unwrap_or_else(|| r.zero());
            let y = qt.get(i).cloned().unwrap_or_else(|| r.zero());
            t2.push(r.sub(&x, &y));
        }
        r0 = std::mem::replace(&mut r1, rr);
        t0 = std::mem::replace(&mut t1, trim(r, t2));
    }
    if r0.len() != 1 {
        return None;
    }
    let k = r.inv(&r0[0]);
    let out: Vec<R::E> = t0.iter().map(|x| r.mul(x, &k)).collect();
    Some(rem(r, &out, m))
}

/// The p-th cyclotomic polynomial with integer coefficients.
pub(crate) fn cyclotomic(p: u32) -> Vec<BigInt> {
    let mut num: Vec<BigInt> = vec![BigInt::zero(); p as usize + 1];
    num[0] = -BigInt::one();
    num[p as usize] = BigInt::one();
    for d in 1..p {
        if p % d == 0 {
            let phi_d = cyclotomic(d);
            num = exact_div_int(&num, &phi_d);
        }
    }
    num
}

fn exact_div_int(a: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let dm = m.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dm];
    for shift in (0..quot.len()).rev() {
        let f = rem[shift + dm].clone();
        for (j, mj) in m.iter().enumerate() {
            rem[shift + j] -= &f * mj;
        }
        quot[shift] = f;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    quot
}

pub(crate) fn is_prime(c: u64) -> bool {
    if c < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= c {
        if c % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// Least r > 0 with c^r ≡ 1 (mod p).
pub(crate) fn mult_order(c: u64, p: u64) -> u64 {
    let mut acc = c % p;
    let mut r = 1;
    while acc != 1 % p {
        acc = (acc as u128 * c as u128 % p as u128) as u64;
        r += 1;
    }
    r
}

/// Lexicographically least (constant term first) monic irreducible factor
/// of Φ_p over 𝔽_c. Every irreducible factor has degree r = ord_p(c), so the
/// first monic degree-r divisor in the enumeration is the answer.
pub(crate) fn least_cyclotomic_factor(p: u32, c: u64) -> Vec<u64> {
    let f = ModC(c);
    let phi: Vec<u64> = cyclotomic(p)
        .iter()
        .map(|x| {
            let m = BigInt::from(c);
            let r = ((x % &m) + &m) % &m;
            u64::try_from(r).unwrap()
        })
        .collect();
    let r = mult_order(c, p as u64) as usize;
    let mut cand = vec![0u64; r];
    loop {
        let mut g = cand.clone();
        g.push(1);
        if rem(&f, &phi, &g).is_empty() {
            return g;
        }
        // advance: the constant term is the most significant digit
        let mut i = r;
        loop {
            if i == 0 {
                unreachable!("cyclotomic polynomial has no factor of degree {r} over F_{c}");
            }
            i -= 1;
            cand[i] += 1;
            if cand[i] < c {
                break;
            }
            cand[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_phi(mut n: u64) -> u64 {
        let mut out = n;
        let mut q = 2;
        while q * q <= n {
            if n % q == 0 {
                while n % q == 0 {
                    n /= q;
                }
                out -= out / q;
            }
            q += 1;
        }
        if n > 1 {
            out -= out / n;
        }
        out
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(5).len(), 5);
    }

    #[test]
    fn factors_over_small_primes() {
        assert_eq!(least_cyclotomic_factor(2, 3), vec![1, 1]);
        assert_eq!(least_cyclotomic_factor(4, 3), vec![1, 0, 1]);
        assert_eq!(least_cyclotomic_factor(3, 7), vec![3, 1]);
        // Φ_5 over F_2 is irreducible of degree 4
        assert_eq!(least_cyclotomic_factor(5, 2), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn inverse_mod_irreducible() {
        let f = ModC(3);
        let m = vec![1, 0, 1];
        let a = vec![1, 1];
        let ai = inv_mod(&f, &a, &m).unwrap();
        assert_eq!(rem(&f, &mul(&f, &a, &ai), &m), vec![1]);
    }

    #[test]
    fn phi_and_order() {
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(7), 6);
        assert_eq!(mult_order(3, 4), 2);
        assert_eq!(mult_order(2, 5), 4);
    }
}
