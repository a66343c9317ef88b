use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::distance_charpoly;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::poly::IntPolynomial;

/// `eigenvalue` has multiplicity at least `multiplicity` in the distance
/// spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinBound {
    pub eigenvalue: i64,
    pub multiplicity: usize,
}

/// Classes of vertices with equal closed neighborhoods.
fn true_twin_classes(g: &Graph) -> Vec<VertexSet> {
    let mut by_nbhd: BTreeMap<u64, VertexSet> = BTreeMap::new();
    for v in 0..g.n() {
        by_nbhd
            .entry(g.closed_neighborhood(v).bits())
            .or_default()
            .insert(v);
    }
    by_nbhd.into_values().collect()
}

/// Lower bounds on eigenvalue multiplicities from twin structure.
///
/// A true-twin class of size r contributes r − 1 to the eigenvalue −1.
/// Several true-twin classes of the same size r sharing the same outside
/// neighborhood (hence pairwise nonadjacent) contribute m − 1 to −(r + 1),
/// m being the number of such classes.
pub fn twin_multiplicity_bounds(g: &Graph) -> Vec<TwinBound> {
    let classes = true_twin_classes(g);
    let mut out: BTreeMap<i64, usize> = BTreeMap::new();
    let minus_one: usize = classes.iter().map(|c| c.len() - 1).sum();
    if minus_one > 0 {
        out.insert(-1, minus_one);
    }
    let mut groups: BTreeMap<(usize, u64), usize> = BTreeMap::new();
    for &c in &classes {
        let v = c.first().expect("nonempty class");
        let outside = g.closed_neighborhood(v) - c;
        *groups.entry((c.len(), outside.bits())).or_default() += 1;
    }
    for ((r, outside), m) in groups {
        if m >= 2 && outside != 0 {
            *out.entry(-(r as i64 + 1)).or_default() += m - 1;
        }
    }
    out.into_iter()
        .rev()
        .map(|(eigenvalue, multiplicity)| TwinBound {
            eigenvalue,
            multiplicity,
        })
        .collect()
}

/// Every bound is confirmed by exact division of the characteristic
/// polynomial by `(x − e)^mult`.
pub fn twin_bounds_hold(g: &Graph) -> Result<bool> {
    let p = distance_charpoly(g)?;
    Ok(twin_multiplicity_bounds(g).iter().all(|b| {
        IntPolynomial::x_minus(b.eigenvalue)
            .pow(b.multiplicity as u32)
            .divides(&p)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn complete_graph() {
        assert_eq!(
            twin_multiplicity_bounds(&complete(5).unwrap()),
            vec![TwinBound {
                eigenvalue: -1,
                multiplicity: 4
            }]
        );
        assert!(twin_bounds_hold(&complete(5).unwrap()).unwrap());
    }

    #[test]
    fn star_leaves_are_false_twins() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(
            twin_multiplicity_bounds(&star),
            vec![TwinBound {
                eigenvalue: -2,
                multiplicity: 3
            }]
        );
        assert!(twin_bounds_hold(&star).unwrap());
    }

    #[test]
    fn k2_copies_sharing_a_hub() {
        // two triangles sharing vertex 0
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let b = twin_multiplicity_bounds(&g);
        assert!(b.contains(&TwinBound {
            eigenvalue: -1,
            multiplicity: 2
        }));
        assert!(b.contains(&TwinBound {
            eigenvalue: -3,
            multiplicity: 1
        }));
        assert!(twin_bounds_hold(&g).unwrap());
        assert!(twin_bounds_hold(&path(5).unwrap()).unwrap());
    }
}
