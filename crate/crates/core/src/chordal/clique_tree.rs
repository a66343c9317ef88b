use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::maximal_cliques_chordal;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A clique tree: maximal cliques joined by a spanning tree in which the
/// cliques containing any fixed vertex form a subtree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTree {
    pub cliques: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
}

/// How equal-weight edges are ordered when building the spanning tree.
pub enum TieBreak<'a, R: Rng> {
    /// By clique index pair; gives the canonical tree.
    Lexicographic,
    /// Shuffled; any such tree is still a clique tree.
    Random(&'a mut R),
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Maximum-weight spanning tree of the clique intersection graph.
pub fn build_clique_tree_with<R: Rng>(g: &Graph, tie: TieBreak<'_, R>) -> Result<CliqueTree> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let cliques = maximal_cliques_chordal(g).ok_or(Error::NotChordal)?;
    let k = cliques.len();
    let mut candidates = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let w = (cliques[i] & cliques[j]).len();
            if w > 0 {
                candidates.push((w, i, j));
            }
        }
    }
    if let TieBreak::Random(rng) = tie {
        candidates.shuffle(rng);
        candidates.sort_by_key(|c| std::cmp::Reverse(c.0));
    } else {
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    }
    let mut uf = UnionFind((0..k).collect());
    let tree_edges = candidates
        .into_iter()
        .filter(|&(_, i, j)| uf.union(i, j))
        .map(|(_, i, j)| (i, j))
        .collect();
    Ok(CliqueTree {
        cliques,
        tree_edges,
    })
}

pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree> {
    build_clique_tree_with::<rand::rngs::ThreadRng>(g, TieBreak::Lexicographic)
}

impl CliqueTree {
    /// Checks the spanning-tree and induced-subtree properties.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.cliques.len();
        if self.tree_edges.len() + 1 != k {
            return false;
        }
        let mut uf = UnionFind((0..k).collect());
        if !self.tree_edges.iter().all(|&(a, b)| uf.union(a, b)) {
            return false;
        }
        (0..g.n()).all(|v| {
            let holding: Vec<usize> = (0..k).filter(|&i| self.cliques[i].contains(v)).collect();
            // a forest on the holding cliques is a tree iff it has |holding|-1 edges
            let inner = self
                .tree_edges
                .iter()
                .filter(|&&(a, b)| self.cliques[a].contains(v) && self.cliques[b].contains(v))
                .count();
            !holding.is_empty() && inner + 1 == holding.len()
        })
    }

    pub fn separators(&self) -> MvsMultiset {
        MvsMultiset::from_separators(
            self.tree_edges
                .iter()
                .map(|&(a, b)| self.cliques[a] & self.cliques[b]),
        )
    }
}

/// Minimal vertex separators with their multiplicities, sorted by
/// cardinality and then by vertex bitmask.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MvsMultiset {
    pub entries: Vec<(VertexSet, usize)>,
}

impl MvsMultiset {
    fn from_separators(seps: impl Iterator<Item = VertexSet>) -> Self {
        let mut all: Vec<VertexSet> = seps.collect();
        all.sort_by_key(|s| (s.len(), s.bits()));
        let mut entries: Vec<(VertexSet, usize)> = Vec::new();
        for s in all {
            match entries.last_mut() {
                Some((t, m)) if *t == s => *m += 1,
                _ => entries.push((s, 1)),
            }
        }
        MvsMultiset { entries }
    }

    /// Number of distinct separators.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities (number of clique-tree edges).
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn multiplicity(&self, s: VertexSet) -> usize {
        self.entries.iter().find(|e| e.0 == s).map_or(0, |e| e.1)
    }

    pub fn max_cardinality(&self) -> usize {
        self.entries.iter().map(|e| e.0.len()).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, usize)> + '_ {
        self.entries.iter().copied()
    }

    pub fn all_unitary(&self) -> bool {
        self.entries.iter().all(|e| e.0.len() == 1)
    }
}

/// Minimal vertex separators of a connected chordal graph from the canonical
/// clique tree.
pub fn minimal_vertex_separators(g: &Graph) -> Result<MvsMultiset> {
    Ok(build_clique_tree(g)?.separators())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};
    use rand::SeedableRng;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn complete_graph_has_trivial_tree() {
        let t = build_clique_tree(&complete(4).unwrap()).unwrap();
        assert_eq!(t.cliques.len(), 1);
        assert!(t.tree_edges.is_empty());
        assert!(t.separators().is_empty());
    }

    #[test]
    fn path_separators() {
        let g = path(4).unwrap();
        let t = build_clique_tree(&g).unwrap();
        assert!(t.is_valid_for(&g));
        let m = t.separators();
        assert_eq!(m.entries, vec![(vs(&[1]), 1), (vs(&[2]), 1)]);
    }

    #[test]
    fn k2_join_three_independent_has_doubled_edge_separator() {
        // hubs 0,1 adjacent; 2,3,4 adjacent to both hubs only
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)])
            .unwrap();
        let m = minimal_vertex_separators(&g).unwrap();
        assert_eq!(m.entries, vec![(vs(&[0, 1]), 2)]);
        assert_eq!(m.total(), 2);
    }

    #[test]
    fn full_house_has_one_hub_separator() {
        // K4 on 0..4 plus vertex 4 adjacent to 0 and 1
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(4, 0), (4, 1)]);
        let g = Graph::from_edges(5, &edges).unwrap();
        let m = minimal_vertex_separators(&g).unwrap();
        assert_eq!(m.entries, vec![(vs(&[0, 1]), 1)]);
    }

    #[test]
    fn random_tie_breaks_give_valid_trees() {
        // star of triangles sharing vertex 0: all ties have weight 1
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (3, 4),
                (0, 5),
                (0, 6),
                (5, 6),
            ],
        )
        .unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let canonical = minimal_vertex_separators(&g).unwrap();
        for _ in 0..10 {
            let t = build_clique_tree_with(&g, TieBreak::Random(&mut rng)).unwrap();
            assert!(t.is_valid_for(&g));
            assert_eq!(t.separators(), canonical);
        }
        assert_eq!(canonical.entries, vec![(vs(&[0]), 2)]);
    }

    #[test]
    fn not_chordal_is_rejected() {
        let c4 = crate::graph::cycle(4).unwrap();
        assert_eq!(build_clique_tree(&c4), Err(Error::NotChordal));
    }
}
