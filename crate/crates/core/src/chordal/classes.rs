use super::{blocks, is_chordal};
use crate::graph::{contains_induced, cycle, path, Graph, VertexSet};

/// Every block is a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    blocks(g).blocks.into_iter().all(|b| g.is_clique(b))
}

/// Hammer–Simeone degree-sequence test.
pub fn is_split(g: &Graph) -> bool {
    let d = g.degree_sequence();
    let m = (0..d.len()).filter(|&i| d[i] >= i).count();
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

pub(crate) fn gem() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
        .expect("gem is valid")
}

/// Chordal and gem-free.
pub fn is_ptolemaic(g: &Graph) -> bool {
    is_chordal(g) && !contains_induced(&gem(), g)
}

/// No induced C4 and no induced P4.
pub fn is_quasi_threshold(g: &Graph) -> bool {
    let c4 = cycle(4).expect("valid");
    let p4 = path(4).expect("valid");
    !contains_induced(&c4, g) && !contains_induced(&p4, g)
}

/// `d(u,v) d(w,x) <= d(u,w) d(v,x) + d(u,x) d(v,w)` over all ordered
/// 4-tuples of distinct vertices. Disconnected graphs fail.
pub fn ptolemy_inequality_holds(g: &Graph) -> bool {
    let Ok(d) = g.distances() else {
        return false;
    };
    let n = g.n();
    let dd = |a: usize, b: usize| u64::from(d.get(a, b));
    for u in 0..n {
        for v in 0..n {
            if v == u {
                continue;
            }
            for w in 0..n {
                if w == u || w == v {
                    continue;
                }
                for x in 0..n {
                    if x == u || x == v || x == w {
                        continue;
                    }
                    if dd(u, v) * dd(w, x) > dd(u, w) * dd(v, x) + dd(u, x) * dd(v, w) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every connected induced subgraph keeps the distances of `g`. Brute force
/// over all vertex subsets, so only meant for small graphs.
pub fn is_distance_hereditary(g: &Graph) -> bool {
    let Ok(d) = g.distances() else {
        return false;
    };
    let full = g.vertices().bits();
    let mut sub = full;
    loop {
        let set = VertexSet::from_bits(sub);
        if set.len() >= 3 {
            let h = g.induced_subgraph(set).expect("nonempty subset");
            if let Ok(dh) = h.distances() {
                let vs = set.to_vec();
                let ok = vs.iter().enumerate().all(|(i, &a)| {
                    vs.iter()
                        .enumerate()
                        .all(|(j, &b)| dh.get(i, j) == d.get(a, b))
                });
                if !ok {
                    return false;
                }
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    true
}
