use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// `det(xI - m)` by Faddeev–LeVerrier. Every division in the recurrence is
/// exact over the integers. A checked `i128` pass is tried first and the
/// computation restarts with big integers on overflow.
pub fn charpoly_exact(m: &[Vec<i64>]) -> Result<IntPolynomial> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquare);
    }
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let coeffs = match leverrier_i128(m) {
        Some(c) => c.into_iter().map(BigInt::from).collect(),
        None => leverrier_big(m),
    };
    Ok(IntPolynomial::new(coeffs))
}

/// Ascending coefficients, or `None` on overflow.
fn leverrier_i128(a: &[Vec<i64>]) -> Option<Vec<i128>> {
    let n = a.len();
    let a: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut mk = vec![vec![0i128; n]; n];
    for (i, row) in mk.iter_mut().enumerate() {
        row[i] = 1;
    }
    for k in 1..=n {
        // am = A * M_k
        let mut am = vec![vec![0i128; n]; n];
        for i in 0..n {
            for l in 0..n {
                let x = a[i][l];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    am[i][j] = am[i][j].checked_add(x.checked_mul(mk[l][j])?)?;
                }
            }
        }
        let mut tr = 0i128;
        for (i, row) in am.iter().enumerate() {
            tr = tr.checked_add(row[i])?;
        }
        let ck = -tr / k as i128;
        c[n - k] = ck;
        for (i, row) in am.iter_mut().enumerate() {
            row[i] = row[i].checked_add(ck)?;
        }
        mk = am;
    }
    Some(c)
}

fn leverrier_big(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let a: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in mk.iter_mut().enumerate() {
        row[i] = BigInt::from(1);
    }
    for k in 1..=n {
        let mut am = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                let x = &a[i][l];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    am[i][j] += x * &mk[l][j];
                }
            }
        }
        let tr: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let ck = -tr / BigInt::from(k);
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &ck;
        }
        c[n - k] = ck;
        mk = am;
    }
    c
}
