//! Chordal structure: elimination orderings, chordless-cycle certificates,
//! maximal cliques, clique trees, minimal vertex separators and blocks.

mod blocks;
mod classes;
mod clique_tree;

pub use blocks::{blocks, BlockDecomposition};
pub use classes::{
    is_block_graph, is_distance_hereditary, is_ptolemaic, is_quasi_threshold, is_split,
    ptolemy_inequality_holds,
};
pub use clique_tree::{
    build_clique_tree, build_clique_tree_with, minimal_vertex_separators, CliqueTree, MvsMultiset,
    TieBreak,
};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Outcome of a chordality test, always with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chordality {
    /// A perfect elimination ordering.
    Chordal(Vec<usize>),
    /// A chordless cycle of length at least four, in cyclic order.
    Cycle(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum cardinality search; returns vertices in visiting order.
/// Ties go to the smallest index.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut left = g.vertices();
    let mut order = Vec::with_capacity(n);
    while !left.is_empty() {
        let v = left
            .iter()
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("nonempty");
        left.remove(v);
        order.push(v);
        for w in g.neighbors(v) & left {
            weight[w] += 1;
        }
    }
    order
}

/// Positions of vertices in an ordering.
fn positions(order: &[usize]) -> [usize; MAX_VERTICES] {
    let mut pos = [usize::MAX; MAX_VERTICES];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Neighbors of `v` that come after it in the ordering with positions `pos`.
fn later_neighbors(g: &Graph, pos: &[usize; MAX_VERTICES], v: usize) -> VertexSet {
    g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect()
}

/// First vertex where `order` fails to be a perfect elimination ordering,
/// together with two nonadjacent later neighbors.
fn peo_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let pos = positions(order);
    for &v in order {
        let later = later_neighbors(g, &pos, v);
        let Some(u) = later.iter().min_by_key(|&w| pos[w]) else {
            continue;
        };
        let missing = later.without(u) - g.neighbors(u);
        if let Some(y) = missing.first() {
            return Some((v, u, y));
        }
    }
    None
}

/// Shortest path from `x` to `y` inside `allowed`, both endpoints included.
fn shortest_path_within(g: &Graph, x: usize, y: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let mut parent = [usize::MAX; MAX_VERTICES];
    let mut seen = VertexSet::singleton(x);
    let mut frontier = vec![x];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in frontier {
            for w in (g.neighbors(v) & allowed) - seen {
                seen.insert(w);
                parent[w] = v;
                if w == y {
                    let mut path = vec![y];
                    let mut c = y;
                    while c != x {
                        c = parent[c];
                        path.push(c);
                    }
                    path.reverse();
                    return Some(path);
                }
                next.push(w);
            }
        }
        frontier = next;
    }
    None
}

/// A chordless cycle through `v`, `x`, `y` where `x`, `y` are nonadjacent
/// neighbors of `v`, if one exists.
fn chordless_cycle_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let allowed = (g.vertices() - g.closed_neighborhood(v)) | VertexSet::singleton(x).with(y);
    let path = shortest_path_within(g, x, y, allowed)?;
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

fn find_chordless_cycle(g: &Graph, hint: Option<(usize, usize, usize)>) -> Option<Vec<usize>> {
    if let Some((v, x, y)) = hint {
        if let Some(c) = chordless_cycle_through(g, v, x, y) {
            return Some(c);
        }
    }
    for v in 0..g.n() {
        let nb = g.neighbors(v).to_vec();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !g.has_edge(x, y) {
                    if let Some(c) = chordless_cycle_through(g, v, x, y) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Chordality via maximum cardinality search, with a witness either way.
pub fn chordality(g: &Graph) -> Chordality {
    let mut peo = maximum_cardinality_search(g);
    peo.reverse();
    match peo_violation(g, &peo) {
        None => Chordality::Chordal(peo),
        Some(hint) => Chordality::Cycle(
            find_chordless_cycle(g, Some(hint)).expect("a failed elimination test has a hole"),
        ),
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    let mut peo = maximum_cardinality_search(g);
    peo.reverse();
    peo_violation(g, &peo).is_none()
}

/// True when `cycle` (cyclic order) is a chordless cycle of length at least 4.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set: VertexSet = cycle.iter().copied().collect();
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        let v = cycle[i];
        let want = VertexSet::singleton(cycle[(i + 1) % k]).with(cycle[(i + k - 1) % k]);
        g.neighbors(v) & set == want
    })
}

/// Maximal cliques of a chordal graph, read off its elimination ordering.
/// Returns `None` if the graph is not chordal.
pub fn maximal_cliques_chordal(g: &Graph) -> Option<Vec<VertexSet>> {
    let Chordality::Chordal(peo) = chordality(g) else {
        return None;
    };
    let pos = positions(&peo);
    let candidates: Vec<VertexSet> = peo
        .iter()
        .map(|&v| later_neighbors(g, &pos, v).with(v))
        .collect();
    let mut cliques: Vec<VertexSet> = Vec::new();
    for (i, &c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, &d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            cliques.push(c);
        }
    }
    cliques.sort();
    Some(cliques)
}

/// Vertices whose neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n())
        .filter(|&v| g.is_clique(g.neighbors(v)))
        .collect()
}
