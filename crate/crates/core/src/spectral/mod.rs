//! Distance spectra: a Jacobi eigensolver, λ₂, the exact λ₂ < −1/2
//! decision, equitable partitions and multiplicity bounds from twins.

mod equitable;
mod twins;

pub use equitable::{check_divisor_divides, divisor_matrix, is_distance_equitable, DivisorMatrix};
pub use twins::{twin_bounds_hold, twin_multiplicity_bounds, TwinBound};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{charpoly_exact, count_distinct_roots_in, IntPolynomial, Point};

pub const DEFAULT_TOL: f64 = 1e-12;
/// Slack used when comparing eigenvalues from different computations.
pub const COMPARE_TOL: f64 = 1e-8;

/// Eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn second(&self) -> Option<f64> {
        self.values.get(1).copied()
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below `tol` (relative to the matrix norm when that exceeds one).
pub fn jacobi_eigenvalues(m: &[Vec<f64>], tol: f64) -> Result<Spectrum> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NonSquare);
    }
    for i in 0..n {
        for j in 0..i {
            if (m[i][j] - m[j][i]).abs() > tol * (1.0 + m[i][j].abs()) {
                return Err(Error::NonSymmetric);
            }
        }
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let scale = a
        .iter()
        .flatten()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(1.0);
    let off = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    for _sweep in 0..100 {
        if off(&a) < tol * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { values, tol })
}

/// Floating distance spectrum of a connected graph.
pub fn distance_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    jacobi_eigenvalues(&g.distances()?.to_f64_rows(), tol)
}

/// Second largest distance eigenvalue (floating point).
pub fn lambda2(g: &Graph) -> Result<f64> {
    lambda2_with_tol(g, DEFAULT_TOL)
}

pub fn lambda2_with_tol(g: &Graph, tol: f64) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices);
    }
    Ok(distance_spectrum(g, tol)?.values[1])
}

/// Exact characteristic polynomial of the distance matrix.
pub fn distance_charpoly(g: &Graph) -> Result<IntPolynomial> {
    charpoly_exact(&g.distances()?.to_i64_rows())
}

/// λ₂ < −1/2 decided from the distance characteristic polynomial alone:
/// −1/2 is not a root and exactly one distinct root lies above it. Since
/// λ₁ is simple and the largest root, that root is λ₁.
pub fn decide_from_charpoly(p: &IntPolynomial) -> Result<bool> {
    let q = p.squarefree_part()?;
    let h = BigRational::new((-1).into(), 2.into());
    if q.sign_at_rational(&h) == 0 {
        return Ok(false);
    }
    Ok(count_distinct_roots_in(&q, &Point::Finite(h), &Point::PosInfinity)? == 1)
}

/// Exact λ₂ < −1/2 test with no floating point on the path.
pub fn decide_lambda2_lt_neg_half_exact(g: &Graph) -> Result<bool> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices);
    }
    decide_from_charpoly(&distance_charpoly(g)?)
}

/// Cauchy interlacing `λ_i(A) ≥ λ_i(B) ≥ λ_{n−m+i}(A)`, with slack.
pub fn interlacing_holds(outer: &Spectrum, inner: &Spectrum) -> Result<bool> {
    let (n, m) = (outer.len(), inner.len());
    if m > n {
        return Err(Error::SizeMismatch(format!(
            "inner spectrum has {m} values, outer only {n}"
        )));
    }
    let a = &outer.values;
    let b = &inner.values;
    Ok((0..m).all(|i| a[i] + COMPARE_TOL >= b[i] && b[i] + COMPARE_TOL >= a[n - m + i]))
}
