use super::{Graph, VertexSet};

/// Searches for an injective map `pattern -> host` under which `pattern` is an
/// induced subgraph of `host`.
///
/// Pattern vertices are mapped in index order and candidates are tried in
/// increasing host order, so the result is the lexicographically first
/// embedding. `map[i]` is the host vertex assigned to pattern vertex `i`.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    // host vertices able to carry each pattern degree
    let by_degree: Vec<VertexSet> = (0..k)
        .map(|i| {
            let d = pattern.degree(i);
            (0..host.n()).filter(|&v| host.degree(v) >= d).collect()
        })
        .collect();
    let mut map = vec![0usize; k];
    let mut cands = vec![VertexSet::EMPTY; k];
    let mut used = VertexSet::EMPTY;
    let mut i = 0;
    cands[0] = by_degree[0];
    loop {
        match cands[i].first() {
            None => {
                if i == 0 {
                    return None;
                }
                i -= 1;
                used.remove(map[i]);
            }
            Some(v) => {
                cands[i].remove(v);
                map[i] = v;
                used.insert(v);
                i += 1;
                if i == k {
                    return Some(map);
                }
                let mut c = by_degree[i] - used;
                let row = pattern.neighbors(i);
                for j in 0..i {
                    let h = host.neighbors(map[j]);
                    c = if row.contains(j) { c & h } else { c - h };
                }
                cands[i] = c;
            }
        }
    }
}

pub fn contains_induced(pattern: &Graph, host: &Graph) -> bool {
    find_induced_embedding(pattern, host).is_some()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && contains_induced(a, b)
}
