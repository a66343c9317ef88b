//! Real roots of x^3 + 7x^2 + 13x + 5 by Sturm isolation and bisection.

use dlambda::poly::{count_distinct_roots_in, real_roots, sturm_chain, IntPolynomial, Point};
use num_traits::ToPrimitive;

fn main() -> dlambda::Result<()> {
    let p = IntPolynomial::from_i64_desc(&[1, 7, 13, 5]);
    for (i, s) in sturm_chain(&p).polys.iter().enumerate() {
        println!("g{i} = {s}");
    }
    for (r, mult) in real_roots(&p, 1e-12)? {
        println!(
            "root {:.6} (multiplicity {mult})",
            r.to_f64().unwrap_or(f64::NAN)
        );
    }
    let below = count_distinct_roots_in(&p, &Point::NegInfinity, &Point::ratio(-1, 2))?;
    println!("roots below -1/2: {below}");
    Ok(())
}
