use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{sign_of, IntPolynomial};
use crate::error::{Error, Result};

/// A point of the extended real line with rational finite values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl Point {
    pub fn ratio(num: i64, den: i64) -> Point {
        Point::Finite(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(v: i64) -> Point {
        Point::Finite(BigRational::from_integer(v.into()))
    }

    fn less_than(&self, other: &Point) -> bool {
        match (self, other) {
            (Point::NegInfinity, Point::NegInfinity) | (Point::PosInfinity, _) => false,
            (Point::NegInfinity, _) | (_, Point::PosInfinity) => true,
            (Point::Finite(_), Point::NegInfinity) => false,
            (Point::Finite(a), Point::Finite(b)) => a < b,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::NegInfinity => write!(f, "-inf"),
            Point::PosInfinity => write!(f, "+inf"),
            Point::Finite(q) => write!(f, "{q}"),
        }
    }
}

fn sign_at(p: &IntPolynomial, at: &Point) -> i8 {
    match at {
        Point::Finite(q) => p.sign_at_rational(q),
        Point::PosInfinity => p.leading().map_or(0, sign_of),
        Point::NegInfinity => {
            let s = p.leading().map_or(0, sign_of);
            if p.degree().is_some_and(|d| d % 2 == 1) {
                -s
            } else {
                s
            }
        }
    }
}

/// Sturm chain `g0 = p`, `g1 = p'`, `g(i) = -rem(g(i-2), g(i-1))`, each term
/// kept as a primitive integer polynomial. Only positive factors are
/// dropped, so sign sequences are those of the rational chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmChain {
    pub polys: Vec<IntPolynomial>,
}

pub fn sturm_chain(p: &IntPolynomial) -> SturmChain {
    let mut polys = vec![p.clone()];
    if p.is_zero() {
        return SturmChain { polys };
    }
    let mut next = p.derivative().primitive_part();
    while !next.is_zero() {
        polys.push(next);
        let n = polys.len();
        let b = &polys[n - 1];
        let (r, k) = polys[n - 2].sparse_pseudo_rem(b).expect("nonzero divisor");
        // r = lc(b)^k * a mod b; flip when that multiplier is negative
        let lc_negative = b.leading().expect("nonzero").is_negative();
        let r = if lc_negative && k % 2 == 1 { r } else { -&r };
        next = r.primitive_part();
    }
    SturmChain { polys }
}

impl SturmChain {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// Signs (-1, 0, 1) of every chain member at `at`.
pub fn sign_pattern(chain: &SturmChain, at: &Point) -> Vec<i8> {
    chain.polys.iter().map(|p| sign_at(p, at)).collect()
}

/// Number of sign changes in the chain at `at`, zeros skipped.
pub fn sign_variations(chain: &SturmChain, at: &Point) -> usize {
    count_changes(sign_pattern(chain, at).into_iter())
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Distinct real roots of `p` in `(a, b]`. Finite endpoints must not be
/// roots.
pub fn count_distinct_roots_in(p: &IntPolynomial, a: &Point, b: &Point) -> Result<usize> {
    let q = p.squarefree_part()?;
    if !a.less_than(b) {
        return Err(Error::EmptyInterval);
    }
    for e in [a, b] {
        if let Point::Finite(v) = e {
            if q.sign_at_rational(v) == 0 {
                return Err(Error::EndpointIsRoot(v.to_string()));
            }
        }
    }
    let chain = sturm_chain(&q);
    Ok(sign_variations(&chain, a) - sign_variations(&chain, b))
}

/// Sign changes among the nonzero coefficients.
pub fn descartes_sign_changes(p: &IntPolynomial) -> usize {
    count_changes(p.coeffs().iter().map(sign_of))
}

/// `1 + max |c_i / c_lead|`, a strict bound on the absolute value of every
/// complex root.
pub fn cauchy_bound(p: &IntPolynomial) -> Result<BigRational> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?.abs();
    let d = p.degree().expect("nonzero");
    let top = p.coeffs()[..d]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    Ok(BigRational::one() + BigRational::new(top, lead))
}

/// Bisection on a sign-changing bracket of the squarefree part of `p`,
/// stopping once the bracket is at most `tol` wide. Exact rational roots
/// met on the way are returned as is.
pub fn refine_root(
    p: &IntPolynomial,
    a: &BigRational,
    b: &BigRational,
    tol: f64,
) -> Result<BigRational> {
    let q = p.squarefree_part()?;
    let (mut lo, mut hi) = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let slo = q.sign_at_rational(&lo);
    let shi = q.sign_at_rational(&hi);
    if slo == 0 {
        return Ok(lo);
    }
    if shi == 0 {
        return Ok(hi);
    }
    if slo == shi {
        return Err(Error::NoSignChange);
    }
    let tol = BigRational::from_float(tol.abs())
        .filter(|t| t.is_positive())
        .ok_or_else(|| Error::InvalidParams("tolerance must be positive".into()))?;
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        let s = q.sign_at_rational(&mid);
        if s == 0 {
            return Ok(mid);
        }
        if s == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / two)
}

/// Disjoint brackets `(a, b]`, one per distinct real root of `p`, in
/// increasing order. The squarefree part changes sign across each bracket
/// and vanishes at no endpoint.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<(BigRational, BigRational)>> {
    let q = p.squarefree_part()?;
    if q.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&q);
    let bound = cauchy_bound(&q)?;
    let var = |x: &BigRational| sign_variations(&chain, &Point::Finite(x.clone()));
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let count = var(&a) - var(&b);
        match count {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let two = BigRational::from_integer(BigInt::from(2));
                let mut mid = (&a + &b) / &two;
                while q.sign_at_rational(&mid) == 0 {
                    mid = (&mid + &b) / &two;
                }
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Real roots with multiplicities, each approximated to within `tol`, in
/// increasing order.
pub fn real_roots(p: &IntPolynomial, tol: f64) -> Result<Vec<(BigRational, usize)>> {
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition()? {
        for (a, b) in isolate_real_roots(&factor)? {
            out.push((refine_root(&factor, &a, &b, tol)?, mult));
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}
