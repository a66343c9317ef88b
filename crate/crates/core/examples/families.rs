//! Building named graphs and testing family membership.

use dlambda::families::{
    is_pt2_subgraph, is_relaxed_block_star_subgraph, make_family, split_satisfies, FAMILY_NAMES,
};
use dlambda::graph::to_graph6;

fn main() -> dlambda::Result<()> {
    println!("families: {}", FAMILY_NAMES.join(", "));
    for (name, params) in [
        ("g_rpq", vec![2, 2, 1]),
        ("pt2", vec![2, 3]),
        ("sp_t", vec![2]),
        ("relaxed_block_star", vec![1, 1, 3, 2]),
    ] {
        let g = make_family(name, &params)?;
        println!(
            "{name}{params:?}: {}  n={} relaxed={} pt2={} split-ok={}",
            to_graph6(&g),
            g.n(),
            is_relaxed_block_star_subgraph(&g),
            is_pt2_subgraph(&g),
            split_satisfies(&g)
        );
    }
    Ok(())
}
