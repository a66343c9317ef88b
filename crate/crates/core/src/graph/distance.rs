use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Integer shortest-path distances of a connected graph, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// BFS from every vertex over bitset frontiers.
    pub fn of(g: &Graph) -> Result<Self> {
        let n = g.n();
        let all = g.vertices();
        let mut d = vec![0u32; n * n];
        for s in 0..n {
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut level = 0;
            while !frontier.is_empty() {
                level += 1;
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | g.neighbors(v);
                }
                frontier = next - seen;
                for v in frontier {
                    d[s * n + v] = level;
                }
                seen = seen | frontier;
            }
            if seen != all {
                return Err(Error::DisconnectedGraph);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest entry, i.e. the diameter.
    pub fn max(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Sum of distances from `v` to the vertices of `set`.
    pub fn to_set(&self, v: usize, set: &[usize]) -> u64 {
        set.iter().map(|&u| self.get(v, u) as u64).sum()
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| self.row(u).iter().map(|&x| x as i64).collect())
            .collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| self.row(u).iter().map(|&x| x as f64).collect())
            .collect()
    }

    /// The principal submatrix on `vs` (in increasing order).
    pub fn principal_submatrix(&self, vs: VertexSet) -> DistanceMatrix {
        let idx = vs.to_vec();
        let n = idx.len();
        let mut d = Vec::with_capacity(n * n);
        for &u in &idx {
            for &v in &idx {
                d.push(self.get(u, v));
            }
        }
        DistanceMatrix { n, d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn complete_graph_distances() {
        let d = complete(4).unwrap().distances().unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn path_metric() {
        let d = path(4).unwrap().distances().unwrap();
        assert_eq!(
            d.to_i64_rows(),
            vec![
                vec![0, 1, 2, 3],
                vec![1, 0, 1, 2],
                vec![2, 1, 0, 1],
                vec![3, 2, 1, 0]
            ]
        );
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(DistanceMatrix::of(&g), Err(Error::DisconnectedGraph));
    }
}
