//! Exact polynomials over the integers and rationals, characteristic
//! polynomials, Sturm chains and real-root isolation.

mod charpoly;
mod rational;
mod sturm;

pub use charpoly::charpoly_exact;
pub use rational::{literal_sturm_sequence, RatPolynomial};
pub use sturm::{
    cauchy_bound, count_distinct_roots_in, descartes_sign_changes, isolate_real_roots, real_roots,
    refine_root, sign_pattern, sign_variations, sturm_chain, Point, SturmChain,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// From ascending `i64` coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// From descending `i64` coefficients, the way polynomials are usually
    /// written down.
    pub fn from_i64_desc(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - r` for an integer `r`.
    pub fn x_minus(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Value at an integer.
    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let Some(d) = self.degree() else {
            return BigRational::zero();
        };
        let den = t.denom();
        BigRational::new(self.eval_homogeneous(t.numer(), den), den.pow(d as u32))
    }

    /// `den^deg * p(num/den)`, an integer with the sign of `p(num/den)`
    /// when `den > 0`.
    fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &dpow;
            dpow *= den;
        }
        acc
    }

    /// Sign (-1, 0, 1) of the value at a rational point.
    pub fn sign_at_rational(&self, t: &BigRational) -> i8 {
        // BigRational keeps the denominator positive
        sign_of(&self.eval_homogeneous(t.numer(), t.denom()))
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Greatest common divisor of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Primitive part with a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        if p.leading().is_some_and(Signed::is_negative) {
            -&p
        } else {
            p
        }
    }

    /// Remainder of `lc(b)^k * a` by `b`, where `k` is the number of
    /// reduction steps taken; returns the remainder and `k`.
    pub(crate) fn sparse_pseudo_rem(&self, b: &Self) -> Result<(Self, u32)> {
        let db = b.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = b.leading().expect("nonzero").clone();
        let mut r = self.clone();
        let mut k = 0;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().expect("nonzero").clone();
            let shift = dr - db;
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, c) in b.coeffs.iter().enumerate() {
                next[i + shift] -= c * &lr;
            }
            r = Self::new(next);
            k += 1;
        }
        Ok((r, k))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Result<Self> {
        let (r, k) = self.sparse_pseudo_rem(b)?;
        let db = b.degree().expect("nonzero");
        let full = self.degree().map_or(0, |da| (da + 1).saturating_sub(db)) as u32;
        Ok(r.scale(&b.leading().expect("nonzero").pow(full - k)))
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem_rational(&self, b: &Self) -> Result<(RatPolynomial, RatPolynomial)> {
        RatPolynomial::from_int(self).div_rem(&RatPolynomial::from_int(b))
    }

    /// Exact quotient `self / q`; fails with the remainder when `q` does not
    /// divide or the quotient is not integral.
    pub fn div_exact(&self, q: &Self) -> Result<Self> {
        let (quot, rem) = self.div_rem_rational(q)?;
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                remainder: rem.to_string(),
            });
        }
        quot.to_int().ok_or_else(|| Error::InexactDivision {
            remainder: format!("non-integral quotient {quot}"),
        })
    }

    pub fn divides(&self, p: &Self) -> bool {
        p.div_exact(self).is_ok()
    }

    /// Monic-up-to-content gcd, normalized to a primitive polynomial with
    /// positive leading coefficient. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.sparse_pseudo_rem(&b).expect("b nonzero").0.normalized();
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative());
        Ok(exact_primitive_quotient(self, &g))
    }

    /// Yun's squarefree decomposition: pairs `(a_i, i)` with `p` equal to
    /// `c * prod a_i^i` for a rational constant `c`. Factors are primitive
    /// with positive leading coefficient; trivial factors are omitted.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return Ok(out);
        }
        let f = self.normalized();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = exact_primitive_quotient(&f, &a0);
        let mut c = RatPolynomial::from_int(&df)
            .div_rem(&RatPolynomial::from_int(&a0))?
            .0;
        let mut d = &c - &RatPolynomial::from_int(&b.derivative());
        let mut i = 1;
        while b.degree().is_some_and(|k| k > 0) {
            let a = b.gcd(&d.to_primitive_int());
            if a.degree().is_some_and(|k| k > 0) {
                out.push((a.clone(), i));
            }
            let ar = RatPolynomial::from_int(&a);
            b = exact_primitive_quotient(&b, &a);
            c = d.div_rem(&ar)?.0;
            d = &c - &RatPolynomial::from_int(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::from_int(self)
    }
}

/// `a / b` over the rationals, reduced to a primitive integer polynomial
/// with positive leading coefficient. `b` must divide `a`.
fn exact_primitive_quotient(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (q, r) = a.div_rem_rational(b).expect("nonzero divisor");
    debug_assert!(r.is_zero(), "gcd must divide");
    q.to_primitive_int().normalized()
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, o: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || o.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, o: IntPolynomial) -> IntPolynomial {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Writes terms in descending degree, e.g. `x^3 + 7x^2 + 13x + 5`.
pub(crate) fn write_terms<C: fmt::Display + Signed + One + Clone>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[C],
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = a.is_one();
        if i == 0 || !unit {
            if i > 0 && a.to_string().contains('/') {
                write!(f, "({a})")?;
            } else {
                write!(f, "{a}")?;
            }
        }
        match i {
            0 => {}
            1 => write!(f, "x")?,
            _ => write!(f, "x^{i}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Serialized as ascending coefficients written as decimal strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(desc: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_desc(desc)
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let x1 = IntPolynomial::x_minus(-1);
        let x2 = IntPolynomial::x_minus(-2);
        let f = &x1.pow(2) * &x2;
        assert_eq!(f, p(&[1, 4, 5, 2]));
        assert_eq!(f.div_exact(&x1).unwrap(), &x1 * &x2);
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let cubic = p(&[1, 7, 13, 5]);
        match cubic.div_exact(&IntPolynomial::x_minus(-1)) {
            Err(Error::InexactDivision { remainder }) => assert_eq!(remainder, "-2"),
            other => panic!("{other:?}"),
        }
        // divisible over Q but not over Z
        assert!(p(&[1, 0]).div_exact(&p(&[2, 0])).is_err());
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(p(&[1, 3, 3, 1]).squarefree_part().unwrap(), p(&[1, 1]));
        assert_eq!(p(&[1, 0, -1]).squarefree_part().unwrap(), p(&[1, 0, -1]));
        // (x-2)(x+1)^2
        assert_eq!(
            p(&[1, 0, -3, -2]).squarefree_part().unwrap(),
            p(&[1, -1, -2])
        );
        assert_eq!(
            IntPolynomial::zero().squarefree_part(),
            Err(Error::ZeroPolynomial)
        );
        // content and sign are normalized away
        assert_eq!(p(&[-4, -8, -4]).squarefree_part().unwrap(), p(&[1, 1]));
    }

    #[test]
    fn yun_decomposition() {
        // (x+1)^3 (x-2)^2 (x^2+1)
        let f = &(&p(&[1, 1]).pow(3) * &p(&[1, -2]).pow(2)) * &p(&[1, 0, 1]);
        let d = f
            .scale(&BigInt::from(-6))
            .squarefree_decomposition()
            .unwrap();
        assert_eq!(
            d,
            vec![(p(&[1, 0, 1]), 1), (p(&[1, -2]), 2), (p(&[1, 1]), 3)]
        );
    }

    #[test]
    fn gcd_and_derivative() {
        let a = &p(&[1, 1]) * &p(&[1, -3]);
        let b = &p(&[1, 1]) * &p(&[2, 5]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[1, 7, 13, 5]).derivative(), p(&[3, 14, 13]));
    }

    #[test]
    fn evaluation() {
        let f = p(&[1, 0, -6, -4]);
        assert_eq!(f.eval_int(&BigInt::from(-2)), BigInt::zero());
        let half = BigRational::new((-1).into(), 2.into());
        assert_eq!(f.eval(&half), BigRational::new((-9).into(), 8.into()));
        assert_eq!(f.sign_at_rational(&half), -1);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 7, 13, 5]).to_string(), "x^3 + 7x^2 + 13x + 5");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "-x^2 + 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn serde_uses_decimal_strings() {
        let f = p(&[1, 0, -2]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["-2","0","1"]"#);
        assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), f);
    }
}
