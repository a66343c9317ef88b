//! Exhaustive enumeration of small connected graphs.
//!
//! Labeled graphs on `n` vertices are indexed by a bitmask over the vertex
//! pairs in graph6 order; bit `k` of the mask is pair `edge_order(n)[k]`.
//! The canonical form of a graph is the relabeling whose adjacency string
//! (pairs in graph6 order, first pair most significant) is smallest.

use std::ops::Range;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const MIN_ENUMERATION: usize = 2;
pub const MAX_ENUMERATION: usize = 7;

/// Vertex pairs `(i, j)`, `i < j`, in graph6 order.
pub fn edge_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Number of labeled graphs (connected or not) on `n` vertices.
pub fn labeled_mask_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

fn check_range(n: usize) -> Result<()> {
    if (MIN_ENUMERATION..=MAX_ENUMERATION).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationRange(n))
    }
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        m &= m - 1;
        let (i, j) = pairs[k];
        adj[i].insert(j);
        adj[j].insert(i);
    }
    Graph::from_adjacency(adj)
}

/// Connected labeled graphs whose masks fall in `masks`, in mask order.
pub fn labeled_in_range(n: usize, masks: Range<u64>) -> Result<impl Iterator<Item = Graph>> {
    check_range(n)?;
    let pairs = edge_order(n);
    let end = masks.end.min(labeled_mask_count(n));
    Ok((masks.start..end)
        .map(move |mask| from_mask(n, &pairs, mask))
        .filter(Graph::is_connected))
}

/// Every connected labeled graph on `n` vertices, once each, in mask order.
/// With `canonical`, only the canonical representative of each isomorphism
/// class is kept.
pub fn enumerate_connected(
    n: usize,
    canonical: bool,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    let it = labeled_in_range(n, 0..labeled_mask_count(n))?;
    if canonical {
        Ok(Box::new(it.filter(is_canonical)))
    } else {
        Ok(Box::new(it))
    }
}

/// Adjacency string of `g` relabeled by `sigma` (new vertex `i` is old
/// vertex `sigma[i]`), first pair in the most significant position.
fn key_under(g: &Graph, pairs: &[(usize, usize)], sigma: &[usize]) -> u64 {
    pairs.iter().fold(0u64, |acc, &(i, j)| {
        acc << 1 | u64::from(g.has_edge(sigma[i], sigma[j]))
    })
}

/// Compares the relabeled string against `best`, stopping at the first
/// differing pair. Returns true when strictly smaller.
fn smaller_under(g: &Graph, pairs: &[(usize, usize)], sigma: &[usize], best: u64) -> bool {
    let len = pairs.len();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let bit = g.has_edge(sigma[i], sigma[j]);
        let b = best >> (len - 1 - k) & 1 == 1;
        if bit != b {
            return !bit;
        }
    }
    false
}

/// Visits every permutation of `0..n` (Heap's algorithm) until `f` returns true.
fn any_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut a: Vec<usize> = (0..n).collect();
    if f(&a) {
        return true;
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            if f(&a) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Minimum adjacency string over all relabelings.
pub fn canonical_key(g: &Graph) -> u64 {
    let pairs = edge_order(g.n());
    let ident: Vec<usize> = (0..g.n()).collect();
    let mut best = key_under(g, &pairs, &ident);
    any_permutation(g.n(), |sigma| {
        if smaller_under(g, &pairs, sigma, best) {
            best = key_under(g, &pairs, sigma);
        }
        false
    });
    best
}

/// The relabeling of `g` achieving [`canonical_key`].
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    let pairs = edge_order(n);
    let key = canonical_key(g);
    let mut mask = 0u64;
    for k in 0..pairs.len() {
        if key >> (pairs.len() - 1 - k) & 1 == 1 {
            mask |= 1 << k;
        }
    }
    from_mask(n, &pairs, mask)
}

/// True when no relabeling of `g` has a smaller adjacency string.
pub fn is_canonical(g: &Graph) -> bool {
    let pairs = edge_order(g.n());
    let ident: Vec<usize> = (0..g.n()).collect();
    let own = key_under(g, &pairs, &ident);
    !any_permutation(g.n(), |sigma| smaller_under(g, &pairs, sigma, own))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, is_isomorphic};

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(2, false).unwrap().count(), 1);
        assert_eq!(enumerate_connected(3, false).unwrap().count(), 4);
        assert_eq!(enumerate_connected(4, false).unwrap().count(), 38);
        assert_eq!(enumerate_connected(4, true).unwrap().count(), 6);
        assert_eq!(enumerate_connected(5, true).unwrap().count(), 21);
    }

    #[test]
    fn range_checks() {
        assert!(enumerate_connected(1, false).is_err());
        assert!(enumerate_connected(8, false).is_err());
    }

    #[test]
    fn k2_is_the_only_two_vertex_graph() {
        let gs: Vec<Graph> = enumerate_connected(2, false).unwrap().collect();
        assert_eq!(gs, vec![complete(2).unwrap()]);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = g.permuted(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(is_isomorphic(&g, &canonical_form(&g)));
        assert!(is_canonical(&canonical_form(&h)));
    }
}
