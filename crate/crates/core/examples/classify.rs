//! Structural verdict with its certificate, next to the exact spectral one.
//!
//!     cargo run --example classify -- 'H~T?__P'

use dlambda::classify::{classify_structural, validate_certificate};
use dlambda::families::{gem, mvs3a, pt2};
use dlambda::graph::{parse_graph6, to_graph6};
use dlambda::spectral::{decide_lambda2_lt_neg_half_exact, lambda2};

fn main() -> dlambda::Result<()> {
    let graphs = match std::env::args().nth(1) {
        Some(g6) => vec![parse_graph6(&g6)?],
        None => vec![gem(), mvs3a(), pt2(2, 2)?],
    };
    for g in graphs {
        let c = classify_structural(&g)?;
        println!("{}: {} ({})", to_graph6(&g), c.verdict, c.reason);
        println!(
            "  certificate {:?}, valid: {}",
            c.certificate,
            validate_certificate(&g, &c)
        );
        println!(
            "  exact: lambda2 < -1/2 is {}, lambda2 ~ {:.5}",
            decide_lambda2_lt_neg_half_exact(&g)?,
            lambda2(&g)?
        );
    }
    Ok(())
}
