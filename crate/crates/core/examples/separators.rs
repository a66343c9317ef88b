//! Clique tree and minimal vertex separators with multiplicities.

use dlambda::chordal::{build_clique_tree, chordality, Chordality};
use dlambda::families::{fixture, sp1};
use dlambda::graph::cycle;

fn main() -> dlambda::Result<()> {
    for (name, g) in [
        ("sp1", sp1()),
        ("mvs2_d", fixture("mvs2_d")?),
        ("c5", cycle(5)?),
    ] {
        match chordality(&g) {
            Chordality::Cycle(c) => println!("{name}: not chordal, chordless cycle {c:?}"),
            Chordality::Chordal(peo) => {
                let tree = build_clique_tree(&g)?;
                println!("{name}: elimination order {peo:?}");
                for c in &tree.cliques {
                    println!("  clique {:?}", c.to_vec());
                }
                for (s, mu) in tree.separators().iter() {
                    println!("  separator {:?} multiplicity {mu}", s.to_vec());
                }
            }
        }
    }
    Ok(())
}
