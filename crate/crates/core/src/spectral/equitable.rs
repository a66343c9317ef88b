use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{distance_spectrum, COMPARE_TOL, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexSet};
use crate::poly::{charpoly_exact, real_roots};

/// Quotient of the distance matrix by an equitable partition:
/// `matrix[i][j]` is the total distance from any vertex of class `i` to
/// class `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorMatrix {
    pub matrix: Vec<Vec<i64>>,
    pub partition: Vec<Vec<usize>>,
}

fn validate(g: &Graph, partition: &[Vec<usize>]) -> Result<()> {
    let mut seen = VertexSet::EMPTY;
    for (i, class) in partition.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::InvalidPartition(format!("class {i} is empty")));
        }
        for &v in class {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
            if seen.contains(v) {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            seen.insert(v);
        }
    }
    if seen != g.vertices() {
        let missing = (g.vertices() - seen).first().expect("nonempty difference");
        return Err(Error::InvalidPartition(format!(
            "vertex {missing} is not covered"
        )));
    }
    Ok(())
}

fn quotient(d: &DistanceMatrix, partition: &[Vec<usize>]) -> Result<Vec<Vec<i64>>> {
    let mut b = Vec::with_capacity(partition.len());
    for class in partition {
        let row: Vec<i64> = partition
            .iter()
            .map(|target| d.to_set(class[0], target) as i64)
            .collect();
        for &v in &class[1..] {
            for (j, target) in partition.iter().enumerate() {
                if d.to_set(v, target) as i64 != row[j] {
                    return Err(Error::NotEquitable {
                        vertex: v,
                        class: j,
                    });
                }
            }
        }
        b.push(row);
    }
    Ok(b)
}

/// Distance divisor matrix of `partition`, or the first vertex whose
/// distance sum to some class differs from its classmates'.
pub fn divisor_matrix(g: &Graph, partition: &[Vec<usize>]) -> Result<DivisorMatrix> {
    validate(g, partition)?;
    let d = g.distances()?;
    Ok(DivisorMatrix {
        matrix: quotient(&d, partition)?,
        partition: partition.to_vec(),
    })
}

pub fn is_distance_equitable(g: &Graph, partition: &[Vec<usize>]) -> Result<bool> {
    match divisor_matrix(g, partition) {
        Ok(_) => Ok(true),
        Err(Error::NotEquitable { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The divisor characteristic polynomial divides that of the distance
/// matrix, and its largest real root matches λ₁.
pub fn check_divisor_divides(g: &Graph, partition: &[Vec<usize>]) -> Result<bool> {
    let b = divisor_matrix(g, partition)?;
    let pb = charpoly_exact(&b.matrix)?;
    let pd = charpoly_exact(&g.distances()?.to_i64_rows())?;
    if !pb.divides(&pd) {
        return Ok(false);
    }
    let top = real_roots(&pb, 1e-12)?
        .last()
        .and_then(|(r, _)| r.to_f64())
        .ok_or_else(|| Error::RootLocationFailure("divisor matrix has no real root".into()))?;
    let lambda1 = distance_spectrum(g, DEFAULT_TOL)?.values[0];
    Ok((top - lambda1).abs() < COMPARE_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn singleton_partition_gives_distance_matrix() {
        let g = path(4).unwrap();
        let part: Vec<Vec<usize>> = (0..4).map(|v| vec![v]).collect();
        let b = divisor_matrix(&g, &part).unwrap();
        assert_eq!(b.matrix, g.distances().unwrap().to_i64_rows());
        assert!(check_divisor_divides(&g, &part).unwrap());
    }

    #[test]
    fn path_symmetry_partition() {
        let g = path(4).unwrap();
        let part = vec![vec![0, 3], vec![1, 2]];
        let b = divisor_matrix(&g, &part).unwrap();
        assert_eq!(b.matrix, vec![vec![3, 3], vec![3, 1]]);
        assert!(check_divisor_divides(&g, &part).unwrap());
    }

    #[test]
    fn non_equitable_partition_is_named() {
        let g = path(4).unwrap();
        let part = vec![vec![0, 1], vec![2, 3]];
        assert_eq!(
            divisor_matrix(&g, &part),
            Err(Error::NotEquitable {
                vertex: 1,
                class: 1
            })
        );
        assert!(!is_distance_equitable(&g, &part).unwrap());
    }

    #[test]
    fn malformed_partitions() {
        let g = path(3).unwrap();
        assert!(matches!(
            divisor_matrix(&g, &[vec![0, 1]]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            divisor_matrix(&g, &[vec![0, 1], vec![1, 2]]),
            Err(Error::InvalidPartition(_))
        ));
    }
}
