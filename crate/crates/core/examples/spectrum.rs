//! Distance matrix, its exact characteristic polynomial and the floating
//! spectrum of a small graph.

use dlambda::families::full_house;
use dlambda::spectral::{distance_charpoly, distance_spectrum, DEFAULT_TOL};

fn main() -> dlambda::Result<()> {
    let g = full_house();
    for row in g.distances()?.to_i64_rows() {
        println!("{row:?}");
    }
    println!("P(x) = {}", distance_charpoly(&g)?);
    let s = distance_spectrum(&g, DEFAULT_TOL)?;
    println!("eigenvalues: {:?}", s.values);
    Ok(())
}
