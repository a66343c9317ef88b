//! Exact factorization of the distance characteristic polynomial of
//! G(r, p, q) and the root-location argument for its quintic factor.
//!
//!     cargo run --example factorization -- 2 3 2

use dlambda::families::{verify_factorization_main, verify_sturm_proof_main};

fn main() -> dlambda::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let (r, p, q) = match args[..] {
        [r, p, q] => (r, p, q),
        _ => (2, 2, 2),
    };
    let rep = verify_factorization_main(r, p, q)?;
    println!("G({r},{p},{q}) on {} vertices", rep.vertices);
    println!("P(x) = {}", rep.charpoly);
    for f in &rep.factors {
        println!("  ({})^{}", f.factor, f.exponent);
    }
    let proof = verify_sturm_proof_main(r, p, q)?;
    println!(
        "f(-1/2) = {}, f(0) = {}",
        proof.f_at_neg_half, proof.f_at_zero
    );
    for (i, g) in proof.chain.iter().enumerate() {
        println!("  g{i} = {g}");
    }
    println!(
        "signs at -1/2 {:?}, at 0 {:?}",
        proof.pattern_at_neg_half, proof.pattern_at_zero
    );
    Ok(())
}
