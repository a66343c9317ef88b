use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{g_rpq, g_rpq_partition, pt2, pt2_partition, relaxed_block_star, RelaxedBlockStarSpec};
use crate::error::{Error, Result};
use crate::poly::{
    charpoly_exact, count_distinct_roots_in, descartes_sign_changes, literal_sturm_sequence,
    IntPolynomial, Point, RatPolynomial,
};
use crate::spectral::{check_divisor_divides, distance_charpoly, divisor_matrix};

/// Coefficients of `f = x⁵ − A x⁴ − B x³ − C x² − D x − E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FCoefficients {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
}

impl FCoefficients {
    pub fn new(r: usize, p: usize, q: usize) -> Self {
        let (r, p, q) = (r as i64, p as i64, q as i64);
        FCoefficients {
            a: 8 * q + 2 * r * p - r - 8,
            b: (8 * r + 36) * q + 15 * r * p - 7 * r - 20,
            c: (28 * r + 52) * q + 33 * r * p - 13 * r - 18,
            d: (24 * r + 30) * q + 23 * r * p - 5 * r - 5,
            e: (6 * r + 6) * q + 5 * r * p,
        }
    }
}

/// The quintic factor of the distance characteristic polynomial of `G(r, p, q)`.
pub fn f_polynomial(r: usize, p: usize, q: usize) -> IntPolynomial {
    let k = FCoefficients::new(r, p, q);
    IntPolynomial::from_i64_desc(&[1, -k.a, -k.b, -k.c, -k.d, -k.e])
}

/// Divisor matrix of `G(r, p, q)` for the partition of
/// [`g_rpq_partition`](super::g_rpq_partition), written out entry by entry.
pub fn f_pi_matrix(r: usize, p: usize, q: usize) -> Vec<Vec<i64>> {
    let (r, p, q) = (r as i64, p as i64, q as i64);
    vec![
        vec![0, p * r, q, q, 2 * q],
        vec![1, r - 1 + 2 * (p - 1) * r, 2 * q, 2 * q, 4 * q],
        vec![1, 2 * p * r, 2 * (q - 1), 1 + 2 * (q - 1), 2 + 4 * (q - 1)],
        vec![1, 2 * p * r, 1 + 2 * (q - 1), 2 * (q - 1), 4 * q],
        vec![1, 2 * p * r, 1 + 2 * (q - 1), 2 * q, 1 + 2 * (2 * q - 2)],
    ]
}

/// Divisor matrix of `Pt2(r, r)` for [`pt2_partition`](super::pt2_partition).
pub fn h_pi_matrix(r: usize) -> Vec<Vec<i64>> {
    let r = r as i64;
    vec![
        vec![0, 4, 2, 4 * r],
        vec![2, 1, 2, 4 * r],
        vec![1, 2, 1, 3 * r],
        vec![2, 4, 3, 4 * r - 1],
    ]
}

/// `x⁴ − (4r+1)x³ − (25r+15)x² − (43r+19)x − (16r+6)`.
pub fn h_pi_polynomial(r: usize) -> IntPolynomial {
    let r = r as i64;
    IntPolynomial::from_i64_desc(&[
        1,
        -(4 * r + 1),
        -(25 * r + 15),
        -(43 * r + 19),
        -(16 * r + 6),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCheck {
    pub factor: IntPolynomial,
    pub exponent: u32,
    pub divides: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationReport {
    pub family: String,
    pub params: Vec<usize>,
    pub vertices: usize,
    pub charpoly: IntPolynomial,
    pub factors: Vec<FactorCheck>,
}

/// Checks that each `factor^exponent` divides `p` and that their product is `p`.
fn check_factorization(
    family: &str,
    params: Vec<usize>,
    vertices: usize,
    p: IntPolynomial,
    factors: Vec<(IntPolynomial, u32)>,
) -> Result<FactorizationReport> {
    let mut checks = Vec::new();
    let mut product = IntPolynomial::one();
    for (factor, exponent) in factors {
        let power = factor.pow(exponent);
        let divides = power.divides(&p);
        if !divides {
            return Err(Error::FactorizationMismatch {
                factor: format!("({factor})^{exponent}"),
            });
        }
        product = &product * &power;
        checks.push(FactorCheck {
            factor,
            exponent,
            divides,
        });
    }
    if product != p {
        return Err(Error::FactorizationMismatch {
            factor: "product of factors".into(),
        });
    }
    Ok(FactorizationReport {
        family: family.into(),
        params,
        vertices,
        charpoly: p,
        factors: checks,
    })
}

fn need_positive(r: usize, p: usize, q: usize) -> Result<()> {
    if r == 0 || p == 0 || q == 0 {
        Err(Error::InvalidParams("r, p, q must be >= 1".into()))
    } else {
        Ok(())
    }
}

/// `P_G = (x+1)^{p(r−1)+q} (x+r+1)^{p−1} (x³+7x²+13x+5)^{q−1} f` for
/// `G = G(r, p, q)`.
pub fn verify_factorization_main(r: usize, p: usize, q: usize) -> Result<FactorizationReport> {
    need_positive(r, p, q)?;
    let g = g_rpq(r, p, q)?;
    let pg = distance_charpoly(&g)?;
    let factors = vec![
        (IntPolynomial::x_minus(-1), (p * (r - 1) + q) as u32),
        (IntPolynomial::x_minus(-(r as i64) - 1), (p - 1) as u32),
        (IntPolynomial::from_i64_desc(&[1, 7, 13, 5]), (q - 1) as u32),
        (f_polynomial(r, p, q), 1),
    ];
    check_factorization("g_rpq", vec![r, p, q], g.n(), pg, factors)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmProofReport {
    pub params: Vec<usize>,
    pub coefficients: FCoefficients,
    pub descartes_changes: usize,
    pub f_at_neg_half: String,
    pub f_at_zero: String,
    pub f_prime_at_neg_half: String,
    /// Literal Sturm chain of `f''`.
    pub chain: Vec<String>,
    pub pattern_at_neg_half: Vec<i8>,
    pub pattern_at_zero: Vec<i8>,
    pub g2_matches: bool,
    pub g3_matches: bool,
    pub roots_in_neg_half_zero: usize,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn variations(pattern: &[i8]) -> usize {
    let nz: Vec<i8> = pattern.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

fn fail(msg: String) -> Error {
    Error::SturmProof(msg)
}

/// Reproduces the argument that `f` has no root in `[−1/2, 0]`: one
/// positive root by Descartes, `f < 0` at both ends, and `f''` without a
/// root there (equal Sturm variation counts).
pub fn verify_sturm_proof_main(r: usize, p: usize, q: usize) -> Result<SturmProofReport> {
    need_positive(r, p, q)?;
    let k = FCoefficients::new(r, p, q);
    let f = f_polynomial(r, p, q);
    let half = rat(-1, 2);
    let zero = BigRational::zero();

    let descartes_changes = descartes_sign_changes(&f);
    if descartes_changes != 1 {
        return Err(fail(format!(
            "f has {descartes_changes} sign changes, expected 1"
        )));
    }
    let f_half = f.eval(&half);
    if f_half != rat(-(2 * r as i64 + 1), 32) {
        return Err(fail(format!("f(-1/2) = {f_half}, expected -(2r+1)/32")));
    }
    let f_zero = f.eval(&zero);
    if f_zero != BigRational::from_integer(BigInt::from(-k.e)) || !f_zero.is_negative() {
        return Err(fail(format!("f(0) = {f_zero}, expected -E < 0")));
    }
    let f_prime_half = f.derivative().eval(&half);
    if !f_prime_half.is_negative() {
        return Err(fail(format!("f'(-1/2) = {f_prime_half} is not negative")));
    }

    let g = f.derivative().derivative();
    let chain = literal_sturm_sequence(&RatPolynomial::from_int(&g));
    if chain.len() != 4 {
        return Err(fail(format!(
            "Sturm chain of f'' has {} terms",
            chain.len()
        )));
    }
    let (a, b, c) = (
        BigRational::from_integer(k.a.into()),
        BigRational::from_integer(k.b.into()),
        BigRational::from_integer(k.c.into()),
    );
    let n = |v: i64| BigRational::from_integer(v.into());
    let g2 = RatPolynomial::new(vec![
        (n(10) * &c + n(2) * &a * &b) / n(5),
        (n(20) * &b + n(8) * &a * &a) / n(5),
    ]);
    let a2 = &a * &a;
    let g3_num = n(375) * &c * &c + (n(450) * &a * &b + n(120) * &a2 * &a) * &c
        - n(150) * &b * &b * &b
        - n(45) * &a2 * &b * &b;
    let g3_den = n(25) * &b * &b + n(20) * &a2 * &b + n(4) * &a2 * &a2;
    let g3 = RatPolynomial::new(vec![-(g3_num / g3_den)]);
    let g2_matches = chain[2] == g2;
    let g3_matches = chain[3] == g3;
    if !g2_matches || !g3_matches {
        return Err(fail("closed forms of g2, g3 differ from the chain".into()));
    }

    let pattern_at_neg_half: Vec<i8> = chain.iter().map(|s| s.sign_at(&half)).collect();
    let pattern_at_zero: Vec<i8> = chain.iter().map(|s| s.sign_at(&zero)).collect();
    for (at, pat) in [("-1/2", &pattern_at_neg_half), ("0", &pattern_at_zero)] {
        if pat[..3] != [-1, -1, 1] {
            return Err(fail(format!("sign pattern at {at} is {pat:?}")));
        }
    }
    if variations(&pattern_at_neg_half) != variations(&pattern_at_zero) {
        return Err(fail("f'' changes sign on [-1/2, 0]".into()));
    }

    let roots_in_neg_half_zero =
        count_distinct_roots_in(&f, &Point::Finite(half), &Point::Finite(zero))?;
    if roots_in_neg_half_zero != 0 {
        return Err(fail(format!(
            "f has {roots_in_neg_half_zero} roots in (-1/2, 0]"
        )));
    }
    Ok(SturmProofReport {
        params: vec![r, p, q],
        coefficients: k,
        descartes_changes,
        f_at_neg_half: f_half.to_string(),
        f_at_zero: f_zero.to_string(),
        f_prime_at_neg_half: f_prime_half.to_string(),
        chain: chain.iter().map(ToString::to_string).collect(),
        pattern_at_neg_half,
        pattern_at_zero,
        g2_matches,
        g3_matches,
        roots_in_neg_half_zero,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pt2Report {
    pub factorization: FactorizationReport,
    pub h_at_neg_half: String,
    pub h_prime_at_neg_half: String,
    pub h_descartes_changes: usize,
    pub quadratic_roots_above_neg_half: usize,
    pub h_roots_in_neg_half_zero: usize,
    pub h_positive_roots: usize,
}

/// `P_D(Pt2(r, r)) = (x+1)^{2r−1} (x² + 2(r+1)x + (r+1)) P_{H_π}` and the
/// location of the roots of the last two factors.
pub fn verify_factorization_pt2(r: usize) -> Result<Pt2Report> {
    if r < 2 {
        return Err(Error::InvalidParams(
            "pt2 factorization needs r >= 2".into(),
        ));
    }
    let g = pt2(r, r)?;
    let ri = r as i64;
    let quad = IntPolynomial::from_i64_desc(&[1, 2 * (ri + 1), ri + 1]);
    let h = h_pi_polynomial(r);
    let factorization = check_factorization(
        "pt2",
        vec![r, r],
        g.n(),
        distance_charpoly(&g)?,
        vec![
            (IntPolynomial::x_minus(-1), (2 * r - 1) as u32),
            (quad.clone(), 1),
            (h.clone(), 1),
        ],
    )?;
    let half = rat(-1, 2);
    let located = |msg: String| Error::RootLocationFailure(msg);

    let h_half = h.eval(&half);
    if h_half != rat(-(4 * ri + 1), 16) {
        return Err(located(format!(
            "P_H(-1/2) = {h_half}, expected -(4r+1)/16"
        )));
    }
    let h_prime_half = h.derivative().eval(&half);
    if h_prime_half != rat(-84 * ri - 21, 4) {
        return Err(located(format!(
            "P_H'(-1/2) = {h_prime_half}, expected -21r-21/4"
        )));
    }
    if quad.sign_at_rational(&half) == 0 {
        return Err(located("-1/2 is a root of the quadratic factor".into()));
    }
    let quadratic_roots_above_neg_half =
        count_distinct_roots_in(&quad, &Point::Finite(half.clone()), &Point::PosInfinity)?;
    let h_roots_in_neg_half_zero =
        count_distinct_roots_in(&h, &Point::Finite(half), &Point::integer(0))?;
    let h_positive_roots = count_distinct_roots_in(&h, &Point::integer(0), &Point::PosInfinity)?;
    let h_descartes_changes = descartes_sign_changes(&h);
    if quadratic_roots_above_neg_half != 0
        || h_roots_in_neg_half_zero != 0
        || h_positive_roots != 1
        || h_descartes_changes != 1
    {
        return Err(located(format!(
            "quadratic roots above -1/2: {quadratic_roots_above_neg_half}, \
             P_H roots in (-1/2, 0]: {h_roots_in_neg_half_zero}, \
             positive roots: {h_positive_roots}, sign changes: {h_descartes_changes}"
        )));
    }
    Ok(Pt2Report {
        factorization,
        h_at_neg_half: h_half.to_string(),
        h_prime_at_neg_half: h_prime_half.to_string(),
        h_descartes_changes,
        quadratic_roots_above_neg_half,
        h_roots_in_neg_half_zero,
        h_positive_roots,
    })
}

/// `(x² + 4x + 2)^{s−1}` divides the distance characteristic polynomial of
/// the relaxed block star.
pub fn verify_factorization_p3(spec: &RelaxedBlockStarSpec) -> Result<FactorCheck> {
    if spec.s < 2 {
        return Err(Error::InvalidParams(
            "needs at least two P3 components".into(),
        ));
    }
    let pg = distance_charpoly(&relaxed_block_star(spec)?)?;
    let factor = IntPolynomial::from_i64_desc(&[1, 4, 2]);
    let exponent = (spec.s - 1) as u32;
    if !factor.pow(exponent).divides(&pg) {
        return Err(Error::FactorizationMismatch {
            factor: format!("({factor})^{exponent}"),
        });
    }
    Ok(FactorCheck {
        factor,
        exponent,
        divides: true,
    })
}

/// The divisor matrix of `G(r, p, q)` is `F_π`, its characteristic
/// polynomial is `f`, and `f` carries λ₁.
pub fn verify_divisor_g_rpq(r: usize, p: usize, q: usize) -> Result<bool> {
    need_positive(r, p, q)?;
    let g = g_rpq(r, p, q)?;
    let part = g_rpq_partition(r, p, q);
    let m = f_pi_matrix(r, p, q);
    Ok(divisor_matrix(&g, &part)?.matrix == m
        && charpoly_exact(&m)? == f_polynomial(r, p, q)
        && check_divisor_divides(&g, &part)?)
}

/// Same for `Pt2(r, r)`, `H_π` and its quartic.
pub fn verify_divisor_pt2(r: usize) -> Result<bool> {
    let g = pt2(r, r)?;
    let part = pt2_partition(r);
    let m = h_pi_matrix(r);
    Ok(divisor_matrix(&g, &part)?.matrix == m
        && charpoly_exact(&m)? == h_pi_polynomial(r)
        && check_divisor_divides(&g, &part)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_examples() {
        let k = FCoefficients::new(1, 1, 1);
        assert_eq!((k.a, k.b, k.c, k.d, k.e), (1, 32, 82, 67, 17));
        assert_eq!(h_pi_matrix(2)[0], vec![0, 4, 2, 8]);
        assert_eq!(f_pi_matrix(3, 2, 1)[0][1], 6);
    }

    #[test]
    fn f_is_divisor_charpoly() {
        assert_eq!(
            charpoly_exact(&f_pi_matrix(2, 3, 2)).unwrap(),
            f_polynomial(2, 3, 2)
        );
        for r in 2..5 {
            assert_eq!(charpoly_exact(&h_pi_matrix(r)).unwrap(), h_pi_polynomial(r));
        }
    }

    #[test]
    fn main_factorization_small() {
        let rep = verify_factorization_main(1, 1, 1).unwrap();
        assert_eq!(rep.vertices, 6);
        let exps: Vec<u32> = rep.factors.iter().map(|f| f.exponent).collect();
        assert_eq!(exps, vec![1, 0, 0, 1]);
        for (r, p, q) in [(2, 2, 2), (3, 2, 4)] {
            assert!(verify_factorization_main(r, p, q).is_ok());
        }
    }

    #[test]
    fn wrong_factor_is_named() {
        let g = g_rpq(2, 2, 2).unwrap();
        let pg = distance_charpoly(&g).unwrap();
        let err = check_factorization(
            "g_rpq",
            vec![2, 2, 2],
            g.n(),
            pg,
            vec![(IntPolynomial::x_minus(-1), 9)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::FactorizationMismatch { factor } if factor.contains("^9")));
    }

    #[test]
    fn sturm_proof_small() {
        let rep = verify_sturm_proof_main(1, 1, 1).unwrap();
        assert_eq!(rep.f_at_neg_half, "-3/32");
        assert_eq!(rep.f_at_zero, "-17");
        assert_eq!(&rep.pattern_at_neg_half[..3], &[-1, -1, 1]);
        assert_eq!(rep.roots_in_neg_half_zero, 0);
    }

    #[test]
    fn pt2_small() {
        let rep = verify_factorization_pt2(2).unwrap();
        assert_eq!(rep.factorization.vertices, 9);
        assert_eq!(rep.h_at_neg_half, "-9/16");
        assert_eq!(
            rep.factorization.factors[1].factor,
            IntPolynomial::from_i64_desc(&[1, 6, 3])
        );
        assert!(verify_factorization_pt2(5).is_ok());
        assert!(verify_factorization_pt2(1).is_err());
    }

    #[test]
    fn p3_division() {
        let two = RelaxedBlockStarSpec {
            cliques: vec![],
            q: 0,
            s: 2,
        };
        assert!(verify_factorization_p3(&two).is_ok());
        let with_k3 = RelaxedBlockStarSpec {
            cliques: vec![(3, 1)],
            q: 0,
            s: 3,
        };
        assert_eq!(verify_factorization_p3(&with_k3).unwrap().exponent, 2);
    }

    #[test]
    fn divisor_checks() {
        assert!(verify_divisor_g_rpq(2, 3, 2).unwrap());
        assert!(verify_divisor_pt2(3).unwrap());
    }
}
