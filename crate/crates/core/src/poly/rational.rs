use std::fmt;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{write_terms, IntPolynomial};
use crate::error::{Error, Result};

/// Polynomial with rational coefficients, ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn sign_at(&self, t: &BigRational) -> i8 {
        let v = self.eval(t);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Polynomial long division.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = b.leading().expect("nonzero").clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let t = r[dr].clone() / &lc;
            if !t.is_zero() {
                for (i, c) in b.coeffs.iter().enumerate() {
                    r[i + dr - db] -= &t * c;
                }
                q[dr - db] = t;
            }
            r.pop();
        }
        Ok((Self::new(q), Self::new(r)))
    }

    /// The integer polynomial, if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Clears denominators and content; the leading sign is kept.
    pub fn to_primitive_int(&self) -> IntPolynomial {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, o: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPolynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPolynomial({self})")
    }
}

/// The textbook Sturm sequence without any rescaling:
/// `g0 = p`, `g1 = p'`, `g(i) = -rem(g(i-2), g(i-1))`.
pub fn literal_sturm_sequence(p: &RatPolynomial) -> Vec<RatPolynomial> {
    let mut seq = vec![p.clone()];
    if p.is_zero() {
        return seq;
    }
    let mut next = p.derivative();
    while !next.is_zero() {
        seq.push(next);
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
        next = -&r;
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn long_division() {
        let a = RatPolynomial::from_int(&IntPolynomial::from_i64_desc(&[2, 0, 1]));
        let b = RatPolynomial::from_int(&IntPolynomial::from_i64_desc(&[2, 1]));
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quot, RatPolynomial::new(vec![q(-1, 2), q(1, 1)]));
        assert_eq!(rem, RatPolynomial::new(vec![q(3, 2)]));
    }

    #[test]
    fn literal_chain_of_x2_minus_2() {
        let p = RatPolynomial::from_int(&IntPolynomial::from_i64_desc(&[1, 0, -2]));
        let s = literal_sturm_sequence(&p);
        assert_eq!(s.len(), 3);
        assert_eq!(s[2], RatPolynomial::new(vec![q(2, 1)]));
    }

    #[test]
    fn primitive_conversion() {
        let p = RatPolynomial::new(vec![q(1, 2), q(-1, 3)]);
        assert_eq!(p.to_primitive_int(), IntPolynomial::from_i64(&[3, -2]));
        assert!(p.to_int().is_none());
    }
}
