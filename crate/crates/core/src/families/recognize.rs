use super::{bg322, bga, pt1, pt2, relaxed_block_star, sp1, sp_t, RelaxedBlockStarSpec};
use crate::chordal::{blocks, is_block_graph, is_split, minimal_vertex_separators};
use crate::graph::{contains_induced, Graph, VertexSet};

fn is_p3(g: &Graph, c: VertexSet) -> bool {
    c.len() == 3 && c.iter().map(|v| (g.neighbors(v) & c).len()).sum::<usize>() == 4
}

fn is_paw(g: &Graph, c: VertexSet) -> bool {
    if c.len() != 4 {
        return false;
    }
    let mut d: Vec<usize> = c.iter().map(|v| (g.neighbors(v) & c).len()).collect();
    d.sort_unstable();
    d == [1, 2, 2, 3]
}

/// A universal vertex `v` such that every component of `g − v` is a
/// clique, a `P3` or a paw.
pub fn relaxed_block_star_center(g: &Graph) -> Option<usize> {
    g.universal_vertices().iter().find(|&v| {
        g.components_within(g.vertices().without(v))
            .into_iter()
            .all(|c| g.is_clique(c) || is_p3(g, c) || is_paw(g, c))
    })
}

/// Connected induced subgraph of some relaxed block star.
pub fn is_relaxed_block_star_subgraph(g: &Graph) -> bool {
    g.n() == 1 || relaxed_block_star_center(g).is_some()
}

/// A relaxed block star containing every relaxed-block-star subgraph on
/// `n` vertices: `n − 1` copies of `K_{n−1}` and enough paws and `P3`s to
/// cover `n − 1` vertices.
pub fn relaxed_oracle_host(n: usize) -> Graph {
    let m = n.saturating_sub(1);
    relaxed_block_star(&RelaxedBlockStarSpec {
        cliques: if m > 0 { vec![(m, m)] } else { vec![] },
        q: m / 3,
        s: m / 3,
    })
    .expect("host fits in 64 vertices for n <= 7")
}

fn host_size(g: &Graph) -> usize {
    g.n().max(2)
}

pub fn is_pt1_subgraph(g: &Graph) -> bool {
    contains_induced(g, &pt1())
}

/// `Pt2(p, q)` for all `p, q` at once: an `n`-vertex graph embeds in some
/// member iff it embeds in `Pt2(n, n)`.
pub fn is_pt2_subgraph(g: &Graph) -> bool {
    let m = host_size(g);
    pt2(m, m).is_ok_and(|h| contains_induced(g, &h))
}

pub fn is_bg322_subgraph(g: &Graph) -> bool {
    let m = host_size(g);
    bg322(m, m).is_ok_and(|h| contains_induced(g, &h))
}

pub fn is_bga_subgraph(g: &Graph) -> bool {
    contains_induced(g, &bga())
}

/// Block graph whose blocks share a vertex.
pub fn is_block_star(g: &Graph) -> bool {
    if !is_block_graph(g) {
        return false;
    }
    let common = blocks(g)
        .blocks
        .into_iter()
        .fold(g.vertices(), |acc, b| acc & b);
    !common.is_empty()
}

/// Block graph in which every minimal vertex separator has multiplicity one.
pub fn is_loose_block_graph(g: &Graph) -> bool {
    is_block_graph(g) && minimal_vertex_separators(g).is_ok_and(|m| m.iter().all(|(_, mu)| mu == 1))
}

/// Split graphs with λ₂ < −1/2: induced subgraphs of `SP1` or of some
/// `SP^t`, or block graphs whose separators satisfy one of
/// (i) at most one separator, (ii) two separators with multiplicities 1
/// and at most 2, (iii) every multiplicity equal to 1.
pub fn split_satisfies(g: &Graph) -> bool {
    if !is_split(g) {
        return false;
    }
    if contains_induced(g, &sp1()) || sp_t(g.n()).is_ok_and(|h| contains_induced(g, &h)) {
        return true;
    }
    if !is_block_graph(g) {
        return false;
    }
    let Ok(mvs) = minimal_vertex_separators(g) else {
        return false;
    };
    let mut mu: Vec<usize> = mvs.iter().map(|(_, m)| m).collect();
    mu.sort_unstable();
    mu.len() <= 1 || (mu.len() == 2 && mu[0] == 1 && mu[1] <= 2) || mu.iter().all(|&m| m == 1)
}
