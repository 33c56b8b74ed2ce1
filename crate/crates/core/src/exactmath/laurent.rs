//! Laurent polynomials in t with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::MathError;

/// Finite sum Σ a_k t^k with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// c·t^k
    pub fn monomial(c: i64, k: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(k, &BigInt::from(c));
        out
    }

    pub fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }

    /// The bar involution t ↦ t⁻¹.
    pub fn bar(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect() }
    }

    /// Value at t = 1.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            if *k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *k == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = MathError;

    fn from_str(text: &str) -> Result<Self, MathError> {
        let err = || MathError::Parse(format!("bad Laurent polynomial {text:?}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let b = s.as_bytes();
        let mut i = 0;
        if b.is_empty() {
            return Err(err());
        }
        while i < b.len() {
            let mut neg = false;
            if b[i] == b'+' || b[i] == b'-' {
                neg = b[i] == b'-';
                i += 1;
            } else if i > 0 {
                return Err(err());
            }
            let start = i;
            // a term ends at the next sign that is not an exponent sign
            while i < b.len() && !((b[i] == b'+' || b[i] == b'-') && b[i - 1] != b'^') {
                i += 1;
            }
            let term = &s[start..i];
            let (coef, k) = match term.find('t') {
                None => (term, 0),
                Some(pos) => {
                    let tail = &term[pos + 1..];
                    let k = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^').ok_or_else(err)?.parse::<i64>().map_err(|_| err())?
                    };
                    (&term[..pos], k)
                }
            };
            let mut c: BigInt = if coef.is_empty() {
                if term.is_empty() {
                    return Err(err());
                }
                BigInt::one()
            } else {
                if !coef.bytes().all(|x| x.is_ascii_digit()) {
                    return Err(err());
                }
                coef.parse().map_err(|_| err())?
            };
            if neg {
                c = -c;
            }
            out.add_term(k, &c);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn bar_of_shifted_constant() {
        assert_eq!(lp("3+t^2").bar(), lp("t^-2+3"));
    }

    #[test]
    fn product_with_bar() {
        let f = lp("1+t");
        assert_eq!(f.mul(&f.bar()).to_string(), "t^-1+2+t");
    }

    #[test]
    fn bar_is_involution() {
        let f = lp("2t^-1+t^3");
        assert_eq!(f.bar().bar(), f);
    }

    #[test]
    fn text_round_trip() {
        for s in ["t^-1+2+t^3", "0", "-t", "5", "-2t^-3-t^-1+7t^4", "t"] {
            assert_eq!(lp(s).to_string(), s);
        }
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("2x".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }
}
