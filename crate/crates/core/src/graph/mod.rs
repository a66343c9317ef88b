//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitrows, together with codecs, standard constructions, shortest-path
//! distances and induced-subgraph search.

mod distance;
mod edgelist;
mod embed;
mod enumerate;
mod graph6;
mod vertex_set;

use std::fmt;

pub use distance::DistanceMatrix;
pub use edgelist::{parse_edge_list, to_edge_list};
pub use embed::{contains_induced, find_induced_embedding, is_isomorphic};
pub use enumerate::{
    canonical_form, canonical_key, edge_order, enumerate_connected, is_canonical, labeled_in_range,
    labeled_mask_count, MAX_ENUMERATION, MIN_ENUMERATION,
};
pub use graph6::{parse_graph6, to_graph6};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Maximum number of vertices.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph with vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; every constructor enforces it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        Graph { adj }
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// True when `set` induces a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.adj[v]))
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.adj[v];
            }
            frontier = (next & within) - seen;
            seen = seen | frontier;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, within);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.component_within(0, self.vertices()) == self.vertices()
    }

    /// Vertices whose closed neighborhood is the whole vertex set.
    pub fn universal_vertices(&self) -> VertexSet {
        let all = self.vertices();
        (0..self.n())
            .filter(|&v| self.closed_neighborhood(v) == all)
            .collect()
    }

    /// The subgraph induced by `vs`, relabeled `0..|vs|` in increasing vertex order.
    pub fn induced_subgraph(&self, vs: VertexSet) -> Result<Graph> {
        if vs.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !vs.is_subset(self.vertices()) {
            let vertex = (vs - self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex,
                n: self.n(),
            });
        }
        let order = vs.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| (self.adj[v] & vs).iter().map(|w| pos[w]).collect())
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph::from_adjacency(adj)
    }

    /// All-pairs shortest-path distances.
    pub fn distances(&self) -> Result<DistanceMatrix> {
        DistanceMatrix::of(self)
    }

    pub fn diameter(&self) -> Result<u32> {
        Ok(self.distances()?.max())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

// ---- constructions ----

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        g.adj[u] = VertexSet::full(n).without(u);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::VertexCount(n));
    }
    let mut g = path(n)?;
    g.add_edge(0, n - 1);
    Ok(g)
}

/// Vertices of `a` keep their labels; vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    let na = a.n();
    let n = na + b.n();
    let mut g = Graph::empty(n)?;
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(u + na, v + na);
    }
    Ok(g)
}

/// Disjoint union plus every edge between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut g = disjoint_union(a, b)?;
    let na = a.n();
    for u in 0..na {
        for v in 0..b.n() {
            g.add_edge(u, v + na);
        }
    }
    Ok(g)
}

/// Disjoint union of a list of graphs, in order.
pub fn disjoint_union_all(parts: &[Graph]) -> Result<Graph> {
    let (first, rest) = parts.split_first().ok_or(Error::EmptyVertexSet)?;
    rest.iter()
        .try_fold(first.clone(), |acc, g| disjoint_union(&acc, g))
}
