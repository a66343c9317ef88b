//! Cross-validates the structural classifier against the exact spectral
//! test on every connected graph up to a given order.
//!
//!     cargo run --release --example enumerate -- 7

use std::time::Instant;

use dlambda::classify::cross_validate_order;

fn main() -> dlambda::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    for n in 2..=max_n {
        let t = Instant::now();
        let s = cross_validate_order(n, false)?;
        println!(
            "n={n}: {} graphs, {} satisfy, {} violate, {} disagreements ({:.1?})",
            s.graphs,
            s.satisfies,
            s.violates,
            s.disagreements.len(),
            t.elapsed()
        );
        for g6 in &s.disagreements {
            println!("  {g6}");
        }
    }
    Ok(())
}
