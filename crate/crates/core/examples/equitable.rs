//! Distance divisor matrices of equitable partitions, and eigenvalue -1 and
//! -(r+1) multiplicities forced by twin vertices.

use dlambda::families::{h_pi_matrix, pt2, pt2_partition};
use dlambda::spectral::{
    check_divisor_divides, divisor_matrix, twin_bounds_hold, twin_multiplicity_bounds,
};

fn main() -> dlambda::Result<()> {
    let r = 3;
    let g = pt2(r, r)?;
    let b = divisor_matrix(&g, &pt2_partition(r))?;
    for row in &b.matrix {
        println!("{row:?}");
    }
    println!("matches the closed form: {}", b.matrix == h_pi_matrix(r));
    println!(
        "divides P_D and carries lambda1: {}",
        check_divisor_divides(&g, &pt2_partition(r))?
    );
    for t in twin_multiplicity_bounds(&g) {
        println!(
            "eigenvalue {} with multiplicity >= {}",
            t.eigenvalue, t.multiplicity
        );
    }
    println!("bounds confirmed by division: {}", twin_bounds_hold(&g)?);
    Ok(())
}
