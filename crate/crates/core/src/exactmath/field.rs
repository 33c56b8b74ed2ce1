//! Field descriptors and exact scalars.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{self, Coef, ModC, Rat};
use super::MathError;

/// The fields supported by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldDescriptor {
    Rational,
    /// ℚ[x]/Φ_p with ε the class of x.
    Cyclotomic(u32),
    PrimeField(u64),
    /// 𝔽_c[x]/g where g is the least monic irreducible factor of Φ_p mod c.
    CyclotomicOverPrime(u32, u64),
}

impl FieldDescriptor {
    /// The order of the distinguished root of unity, if there is one.
    pub fn root_order(&self) -> Option<u32> {
        match *self {
            FieldDescriptor::Cyclotomic(p) | FieldDescriptor::CyclotomicOverPrime(p, _) => Some(p),
            _ => None,
        }
    }

    /// Characteristic of the field.
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldDescriptor::Rational | FieldDescriptor::Cyclotomic(_) => 0,
            FieldDescriptor::PrimeField(c) | FieldDescriptor::CyclotomicOverPrime(_, c) => c,
        }
    }

    pub fn field(&self) -> Result<&'static Field, MathError> {
        Field::get(*self)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::Cyclotomic(p) => write!(f, "cyclotomic:{p}"),
            FieldDescriptor::PrimeField(c) => write!(f, "fp:{c}"),
            FieldDescriptor::CyclotomicOverPrime(p, c) => write!(f, "fpc:{p},{c}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Self, MathError> {
        let bad = || MathError::InvalidDescriptor(s.to_string());
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldDescriptor::Rational);
        }
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let d = match kind {
            "cyclotomic" => FieldDescriptor::Cyclotomic(rest.parse().map_err(|_| bad())?),
            "fp" => FieldDescriptor::PrimeField(rest.parse().map_err(|_| bad())?),
            "fpc" => {
                let (p, c) = rest.split_once(',').ok_or_else(bad)?;
                FieldDescriptor::CyclotomicOverPrime(
                    p.trim().parse().map_err(|_| bad())?,
                    c.trim().parse().map_err(|_| bad())?,
                )
            }
            _ => return Err(bad()),
        };
        Field::get(d)?;
        Ok(d)
    }
}

#[derive(Debug)]
enum Repr {
    Rat { modulus: Vec<BigRational> },
    Fin { c: u64, modulus: Vec<u64> },
}

/// A concrete field: descriptor plus the modulus used for reduction.
#[derive(Debug)]
pub struct Field {
    desc: FieldDescriptor,
    repr: Repr,
}

static REGISTRY: OnceLock<Mutex<HashMap<FieldDescriptor, &'static Field>>> = OnceLock::new();

impl Field {
    /// Interned field for a descriptor; validates the descriptor.
    pub fn get(desc: FieldDescriptor) -> Result<&'static Field, MathError> {
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = reg.lock().unwrap().get(&desc) {
            return Ok(f);
        }
        let field = Field::build(desc)?;
        let mut guard = reg.lock().unwrap();
        Ok(*guard.entry(desc).or_insert_with(|| Box::leak(Box::new(field))))
    }

    fn build(desc: FieldDescriptor) -> Result<Field, MathError> {
        let invalid = || MathError::InvalidDescriptor(desc.to_string());
        let repr = match desc {
            FieldDescriptor::Rational => Repr::Rat {
                modulus: vec![BigRational::zero(), BigRational::one()],
            },
            FieldDescriptor::Cyclotomic(p) => {
                if p < 2 {
                    return Err(invalid());
                }
                Repr::Rat {
                    modulus: poly::cyclotomic(p)
                        .into_iter()
                        .map(BigRational::from_integer)
                        .collect(),
                }
            }
            FieldDescriptor::PrimeField(c) => {
                if !poly::is_prime(c) || c > u32::MAX as u64 {
                    return Err(invalid());
                }
                Repr::Fin { c, modulus: vec![0, 1] }
            }
            FieldDescriptor::CyclotomicOverPrime(p, c) => {
                if p < 1 || !poly::is_prime(c) || c > u32::MAX as u64 || p as u64 % c == 0 {
                    return Err(invalid());
                }
                Repr::Fin {
                    c,
                    modulus: poly::least_cyclotomic_factor(p, c),
                }
            }
        };
        Ok(Field { desc, repr })
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.desc
    }

    /// Dimension over the prime field.
    pub fn degree(&self) -> usize {
        match &self.repr {
            Repr::Rat { modulus } => modulus.len() - 1,
            Repr::Fin { modulus, .. } => modulus.len() - 1,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.desc.characteristic()
    }

    /// Monic modulus; rational coefficients for characteristic 0, residues otherwise.
    pub fn modulus_string(&self) -> String {
        match &self.repr {
            Repr::Rat { modulus } => format!("{modulus:?}"),
            Repr::Fin { modulus, .. } => format!("{modulus:?}"),
        }
    }

    fn from_coeffs(&'static self, coeffs: Coeffs) -> Scalar {
        let coeffs = match (coeffs, &self.repr) {
            (Coeffs::Rat(v), Repr::Rat { modulus }) => {
                let mut r = poly::rem(&Rat, &v, modulus);
                r.resize(modulus.len() - 1, BigRational::zero());
                Coeffs::Rat(r)
            }
            (Coeffs::Fin(v), Repr::Fin { c, modulus }) => {
                let mut r = poly::rem(&ModC(*c), &v, modulus);
                r.resize(modulus.len() - 1, 0);
                Coeffs::Fin(r)
            }
            _ => unreachable!("coefficient kind does not match field"),
        };
        Scalar { field: self, coeffs }
    }

    pub fn zero(&'static self) -> Scalar {
        match &self.repr {
            Repr::Rat { .. } => self.from_coeffs(Coeffs::Rat(Vec::new())),
            Repr::Fin { .. } => self.from_coeffs(Coeffs::Fin(Vec::new())),
        }
    }

    pub fn one(&'static self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&'static self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&'static self, n: &BigInt) -> Scalar {
        match &self.repr {
            Repr::Rat { .. } => self.from_coeffs(Coeffs::Rat(vec![BigRational::from_integer(n.clone())])),
            Repr::Fin { c, .. } => self.from_coeffs(Coeffs::Fin(vec![reduce_bigint(n, *c)])),
        }
    }

    /// Image of a rational number; fails in characteristic c when c divides the denominator.
    pub fn from_rational(&'static self, q: &BigRational) -> Result<Scalar, MathError> {
        match &self.repr {
            Repr::Rat { .. } => Ok(self.from_coeffs(Coeffs::Rat(vec![q.clone()]))),
            Repr::Fin { c, .. } => Ok(self.from_coeffs(Coeffs::Fin(vec![rational_mod(q, *c)?]))),
        }
    }

    /// The class of x, of multiplicative order exactly p.
    pub fn primitive_root(&'static self) -> Result<Scalar, MathError> {
        match self.desc {
            FieldDescriptor::Cyclotomic(_) | FieldDescriptor::CyclotomicOverPrime(..) => match &self.repr {
                Repr::Rat { .. } => Ok(self.from_coeffs(Coeffs::Rat(vec![BigRational::zero(), BigRational::one()]))),
                Repr::Fin { .. } => Ok(self.from_coeffs(Coeffs::Fin(vec![0, 1]))),
            },
            _ => Err(MathError::NoRoot(self.desc)),
        }
    }

    /// A primitive k-th root of unity in this field, chosen deterministically.
    ///
    /// In fields carrying ε of order p with k | p this is ε^{p/k}; -1 serves
    /// for k = 2 everywhere; in prime fields the least residue of order k is used.
    pub fn root_of_unity(&'static self, k: u32) -> Result<Scalar, MathError> {
        if k == 1 {
            return Ok(self.one());
        }
        if let Some(p) = self.desc.root_order() {
            if p % k == 0 {
                return Ok(self.primitive_root()?.pow((p / k) as i64));
            }
        }
        if k == 2 && self.characteristic() != 2 {
            return Ok(self.from_int(-1));
        }
        if let FieldDescriptor::PrimeField(c) = self.desc {
            if (c - 1) % k as u64 == 0 {
                for g in 2..c {
                    let s = self.from_int(g as i64);
                    if s.multiplicative_order() == Some(k as u64) {
                        return Ok(s);
                    }
                }
            }
        }
        Err(MathError::NoRootOfOrder(self.desc, k))
    }

    /// Parse the text form: a polynomial in `E` with rational coefficients.
    pub fn parse(&'static self, text: &str) -> Result<Scalar, MathError> {
        let terms = parse_terms(text)?;
        let deg_cap = terms.iter().map(|(_, k)| *k).max().unwrap_or(0);
        if deg_cap > 0 && self.desc.root_order().is_none() {
            return Err(MathError::Parse(format!("symbol E not available over {}", self.desc)));
        }
        match &self.repr {
            Repr::Rat { .. } => {
                let mut v = vec![BigRational::zero(); deg_cap + 1];
                for (q, k) in terms {
                    v[k] += q;
                }
                Ok(self.from_coeffs(Coeffs::Rat(v)))
            }
            Repr::Fin { c, .. } => {
                let mut v = vec![0u64; deg_cap + 1];
                for (q, k) in terms {
                    v[k] = ModC(*c).add(&v[k], &rational_mod(&q, *c)?);
                }
                Ok(self.from_coeffs(Coeffs::Fin(v)))
            }
        }
    }

    /// Ring homomorphism from ℚ or ℚ(ε_p) into this field sending ε_p to
    /// [`Field::root_of_unity`]`(p)`.
    pub fn convert(&'static self, s: &Scalar) -> Result<Scalar, MathError> {
        if s.field.desc == self.desc {
            return Ok(s.clone());
        }
        let coeffs = match &s.coeffs {
            Coeffs::Rat(v) => v,
            Coeffs::Fin(v) => {
                if s.field.degree() == 1 && s.field.characteristic() == self.characteristic() {
                    return Ok(self.from_int(v[0] as i64));
                }
                return Err(MathError::DescriptorMismatch(s.field.desc, self.desc));
            }
        };
        let mut acc = self.zero();
        let root = if coeffs.iter().skip(1).all(|q| q.is_zero()) {
            self.one()
        } else {
            let p = s.field.desc.root_order().unwrap_or(1);
            self.root_of_unity(p)?
        };
        let mut power = self.one();
        for q in coeffs {
            if !q.is_zero() {
                acc = &acc + &(&self.from_rational(q)? * &power);
            }
            power = &power * &root;
        }
        Ok(acc)
    }
}

/// ℚ(ε_p) → 𝔽_{p,c}, sending ε to the class of x modulo the chosen factor.
pub fn reduce_pi(z: &Scalar, c: u64) -> Result<Scalar, MathError> {
    let p = match z.field.desc {
        FieldDescriptor::Cyclotomic(p) => p,
        other => return Err(MathError::DescriptorMismatch(other, FieldDescriptor::Cyclotomic(0))),
    };
    let target = Field::get(FieldDescriptor::CyclotomicOverPrime(p, c))?;
    let Coeffs::Rat(v) = &z.coeffs else { unreachable!() };
    let mut out = Vec::with_capacity(v.len());
    for q in v {
        out.push(rational_mod(q, c)?);
    }
    Ok(target.from_coeffs(Coeffs::Fin(out)))
}

fn reduce_bigint(n: &BigInt, c: u64) -> u64 {
    let m = BigInt::from(c);
    n.mod_floor(&m).to_u64().unwrap()
}

fn rational_mod(q: &BigRational, c: u64) -> Result<u64, MathError> {
    let den = reduce_bigint(q.denom(), c);
    if den == 0 {
        return Err(MathError::BadDenominator(q.to_string(), c));
    }
    let f = ModC(c);
    Ok(f.mul(&reduce_bigint(q.numer(), c), &f.inv(&den)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Coeffs {
    Rat(Vec<BigRational>),
    Fin(Vec<u64>),
}

/// An element of one of the supported fields, in canonical reduced form.
#[derive(Clone)]
pub struct Scalar {
    field: &'static Field,
    coeffs: Coeffs,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.desc == other.field.desc && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.desc.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Arithmetic operation selector for [`Scalar::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.field.desc
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Rat(v) => v.iter().all(|x| x.is_zero()),
            Coeffs::Fin(v) => v.iter().all(|x| *x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// Checked arithmetic; errors on mismatched descriptors or division by zero.
    pub fn apply(&self, other: &Scalar, op: Op) -> Result<Scalar, MathError> {
        if self.field.desc != other.field.desc {
            return Err(MathError::DescriptorMismatch(self.field.desc, other.field.desc));
        }
        Ok(match op {
            Op::Add => self.add_same(other),
            Op::Sub => self.sub_same(other),
            Op::Mul => self.mul_same(other),
            Op::Div => {
                let inv = other.inv()?;
                self.mul_same(&inv)
            }
        })
    }

    fn add_same(&self, o: &Scalar) -> Scalar {
        let coeffs = match (&self.coeffs, &o.coeffs) {
            (Coeffs::Rat(a), Coeffs::Rat(b)) => Coeffs::Rat(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            (Coeffs::Fin(a), Coeffs::Fin(b)) => {
                let f = self.modc();
                Coeffs::Fin(a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect())
            }
            _ => unreachable!(),
        };
        Scalar { field: self.field, coeffs }
    }

    fn sub_same(&self, o: &Scalar) -> Scalar {
        self.add_same(&o.neg())
    }

    fn mul_same(&self, o: &Scalar) -> Scalar {
        match (&self.coeffs, &o.coeffs) {
            (Coeffs::Rat(a), Coeffs::Rat(b)) => {
                if a.len() == 1 {
                    return Scalar { field: self.field, coeffs: Coeffs::Rat(vec![&a[0] * &b[0]]) };
                }
                self.field.from_coeffs(Coeffs::Rat(poly::mul(&Rat, a, b)))
            }
            (Coeffs::Fin(a), Coeffs::Fin(b)) => {
                let f = self.modc();
                if a.len() == 1 {
                    return Scalar { field: self.field, coeffs: Coeffs::Fin(vec![f.mul(&a[0], &b[0])]) };
                }
                self.field.from_coeffs(Coeffs::Fin(poly::mul(&f, a, b)))
            }
            _ => unreachable!(),
        }
    }

    fn modc(&self) -> ModC {
        match &self.field.repr {
            Repr::Fin { c, .. } => ModC(*c),
            Repr::Rat { .. } => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        let coeffs = match &self.coeffs {
            Coeffs::Rat(a) => Coeffs::Rat(a.iter().map(|x| -x).collect()),
            Coeffs::Fin(a) => {
                let f = self.modc();
                Coeffs::Fin(a.iter().map(|x| f.sub(&0, x)).collect())
            }
        };
        Scalar { field: self.field, coeffs }
    }

    pub fn inv(&self) -> Result<Scalar, MathError> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(match (&self.coeffs, &self.field.repr) {
            (Coeffs::Rat(a), Repr::Rat { modulus }) => {
                if a.len() == 1 {
                    return Ok(Scalar { field: self.field, coeffs: Coeffs::Rat(vec![a[0].recip()]) });
                }
                let inv = poly::inv_mod(&Rat, a, modulus).ok_or(MathError::DivisionByZero)?;
                self.field.from_coeffs(Coeffs::Rat(inv))
            }
            (Coeffs::Fin(a), Repr::Fin { c, modulus }) => {
                let inv = poly::inv_mod(&ModC(*c), a, modulus).ok_or(MathError::DivisionByZero)?;
                self.field.from_coeffs(Coeffs::Fin(inv))
            }
            _ => unreachable!(),
        })
    }

    /// Integer power; negative exponents invert (panics on zero base).
    pub fn pow(&self, e: i64) -> Scalar {
        let mut base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&base);
            }
            base = base.mul_same(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, searched up to a generous bound.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let one = self.field.one();
        let mut acc = self.clone();
        for k in 1..=100_000u64 {
            if acc == one {
                return Some(k);
            }
            acc = acc.mul_same(self);
        }
        None
    }

    /// Coefficients as rationals, when the field has characteristic 0.
    pub fn rational_coeffs(&self) -> Option<&[BigRational]> {
        match &self.coeffs {
            Coeffs::Rat(v) => Some(v),
            Coeffs::Fin(_) => None,
        }
    }

    /// Integer value when the scalar is a rational integer (characteristic 0),
    /// or its least nonnegative residue (prime fields).
    pub fn as_integer(&self) -> Option<BigInt> {
        match &self.coeffs {
            Coeffs::Rat(v) => {
                if v.iter().skip(1).all(|x| x.is_zero()) && v[0].is_integer() {
                    Some(v[0].to_integer())
                } else {
                    None
                }
            }
            Coeffs::Fin(v) => {
                if v.iter().skip(1).all(|x| *x == 0) {
                    Some(BigInt::from(v[0]))
                } else {
                    None
                }
            }
        }
    }

    /// True when every coefficient is a rational with denominator 1.
    pub fn is_integral(&self) -> bool {
        match &self.coeffs {
            Coeffs::Rat(v) => v.iter().all(|x| x.is_integer()),
            Coeffs::Fin(_) => true,
        }
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $op:expr) => {
        impl std::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.apply(rhs, $op).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl std::ops::$tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_op!(Add, add, Op::Add);
forward_op!(Sub, sub, Op::Sub);
forward_op!(Mul, mul, Op::Mul);
forward_op!(Div, div, Op::Div);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(BigRational, usize)> = match &self.coeffs {
            Coeffs::Rat(v) => v.iter().enumerate().filter(|(_, q)| !q.is_zero()).map(|(k, q)| (q.clone(), k)).collect(),
            Coeffs::Fin(v) => v
                .iter()
                .enumerate()
                .filter(|(_, q)| **q != 0)
                .map(|(k, q)| (BigRational::from_integer(BigInt::from(*q)), k))
                .collect(),
        };
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (q, k)) in terms.iter().rev().enumerate() {
            let neg = q.is_negative();
            let mag = q.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if *k == 1 {
                        write!(f, "E")?;
                    } else {
                        write!(f, "E^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Split `1/2*E^2 - 1` into (coefficient, exponent) terms.
fn parse_terms(text: &str) -> Result<Vec<(BigRational, usize)>, MathError> {
    let err = |msg: &str| MathError::Parse(format!("{msg} in scalar {text:?}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigRational::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i > 0 {
            return Err(err("missing operator"));
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &s[start..i];
        if term.is_empty() {
            return Err(err("empty term"));
        }
        let (coef, power) = match term.find('E') {
            None => (term, None),
            Some(pos) => {
                let head = &term[..pos];
                let tail = &term[pos + 1..];
                let coef = if head.is_empty() {
                    "1"
                } else {
                    head.strip_suffix('*').ok_or_else(|| err("expected '*' before E"))?
                };
                let k = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .ok_or_else(|| err("expected '^' after E"))?
                        .parse::<usize>()
                        .map_err(|_| err("bad exponent"))?
                };
                (coef, Some(k))
            }
        };
        let q = parse_rational(coef).ok_or_else(|| err("bad coefficient"))?;
        terms.push((sign * q, power.unwrap_or(0)));
    }
    Ok(terms)
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if n.is_empty() || !n.bytes().all(|b| b.is_ascii_digit()) || !d.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(d: FieldDescriptor) -> &'static Field {
        Field::get(d).unwrap()
    }

    #[test]
    fn eps_squared_in_cyclotomic_two() {
        let k = f(FieldDescriptor::Cyclotomic(2));
        let e = k.primitive_root().unwrap();
        assert_eq!(&e * &e, k.one());
        assert_eq!(e, k.from_int(-1));
    }

    #[test]
    fn fifth_root_sum() {
        let k = f(FieldDescriptor::Cyclotomic(5));
        let e = k.primitive_root().unwrap();
        let s = &(&e + &e.pow(2)) + &(&e.pow(3) + &e.pow(4));
        assert_eq!(s, k.from_int(-1));
    }

    #[test]
    fn rational_sum() {
        let q = f(FieldDescriptor::Rational);
        let a = q.parse("1/2").unwrap();
        let b = q.parse("1/3").unwrap();
        assert_eq!((&a + &b).to_string(), "5/6");
    }

    #[test]
    fn mismatch_and_zero_division() {
        let q = f(FieldDescriptor::Rational);
        let k = f(FieldDescriptor::PrimeField(3));
        assert!(matches!(q.one().apply(&k.one(), Op::Add), Err(MathError::DescriptorMismatch(..))));
        assert!(matches!(q.one().apply(&q.zero(), Op::Div), Err(MathError::DivisionByZero)));
    }

    #[test]
    fn roots_over_prime_fields() {
        let k = f(FieldDescriptor::CyclotomicOverPrime(2, 3));
        assert_eq!(k.primitive_root().unwrap().to_string(), "2");
        let k4 = f(FieldDescriptor::CyclotomicOverPrime(4, 3));
        assert_eq!(k4.modulus_string(), "[1, 0, 1]");
        let x = k4.primitive_root().unwrap();
        assert_eq!(x.to_string(), "E");
        assert_eq!(x.multiplicative_order(), Some(4));
        assert!(matches!(f(FieldDescriptor::PrimeField(5)).primitive_root(), Err(MathError::NoRoot(_))));
        assert!(matches!(f(FieldDescriptor::Rational).primitive_root(), Err(MathError::NoRoot(_))));
    }

    #[test]
    fn reduction_examples() {
        let k = f(FieldDescriptor::Cyclotomic(2));
        assert_eq!(reduce_pi(&k.one(), 3).unwrap().to_string(), "1");
        let e = k.primitive_root().unwrap();
        assert_eq!(reduce_pi(&e, 3).unwrap().to_string(), "2");
        let half_e = &k.parse("1/2").unwrap() * &e;
        assert_eq!(reduce_pi(&half_e, 3).unwrap().to_string(), "1");
        let third = k.parse("1/3").unwrap();
        assert!(matches!(reduce_pi(&third, 3), Err(MathError::BadDenominator(..))));
    }

    #[test]
    fn text_round_trip() {
        let k = f(FieldDescriptor::Cyclotomic(5));
        for s in ["1/2*E^2 - 1", "0", "-E", "E^3 + 2*E - 7/3", "-1/2"] {
            let x = k.parse(s).unwrap();
            assert_eq!(x.to_string(), s);
            assert_eq!(k.parse(&x.to_string()).unwrap(), x);
        }
        assert!(k.parse("1/0").is_err());
        assert!(k.parse("2E").is_err());
        assert!(f(FieldDescriptor::Rational).parse("E").is_err());
    }

    #[test]
    fn descriptor_text() {
        for s in ["rational", "cyclotomic:5", "fp:3", "fpc:4,3"] {
            let d: FieldDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("fp:4".parse::<FieldDescriptor>().is_err());
        assert!("fpc:3,3".parse::<FieldDescriptor>().is_err());
    }

    #[test]
    fn conversions() {
        let k = f(FieldDescriptor::Cyclotomic(2));
        let x = k.parse("3*E + 1/2").unwrap();
        let q = f(FieldDescriptor::Rational);
        assert_eq!(q.convert(&x).unwrap(), q.parse("-5/2").unwrap());
        let f3 = f(FieldDescriptor::PrimeField(3));
        assert_eq!(f3.convert(&x).unwrap(), f3.from_int(2 * -5));
        let k6 = f(FieldDescriptor::Cyclotomic(6));
        let w = f(FieldDescriptor::Cyclotomic(3)).primitive_root().unwrap();
        assert_eq!(k6.convert(&w).unwrap().pow(3), k6.one());
        let f7 = f(FieldDescriptor::PrimeField(7));
        assert_eq!(f7.root_of_unity(3).unwrap().multiplicative_order(), Some(3));
    }
}
