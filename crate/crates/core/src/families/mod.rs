//! Named graphs and graph families: fixed graphs transcribed as fixtures,
//! parameterized constructors, recognizers for the families that satisfy
//! λ₂ < −1/2, and exact checks of their characteristic polynomials.

mod recognize;
mod theorems;

pub use recognize::{
    is_bg322_subgraph, is_bga_subgraph, is_block_star, is_loose_block_graph, is_pt1_subgraph,
    is_pt2_subgraph, is_relaxed_block_star_subgraph, relaxed_block_star_center,
    relaxed_oracle_host, split_satisfies,
};
pub use theorems::{
    f_pi_matrix, f_polynomial, h_pi_matrix, h_pi_polynomial, verify_divisor_g_rpq,
    verify_divisor_pt2, verify_factorization_main, verify_factorization_p3,
    verify_factorization_pt2, verify_sturm_proof_main, FCoefficients, FactorizationReport,
    Pt2Report, SturmProofReport,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    complete, cycle, disjoint_union_all, join, parse_edge_list, path, Graph, MAX_VERTICES,
};

/// Fixed graphs stored as edge-list fixtures, by file stem.
pub const FIXTURES: &[(&str, &str)] = &[
    ("f01", include_str!("../../fixtures/f01.txt")),
    ("f02", include_str!("../../fixtures/f02.txt")),
    ("f03", include_str!("../../fixtures/f03.txt")),
    ("f04", include_str!("../../fixtures/f04.txt")),
    ("f05", include_str!("../../fixtures/f05.txt")),
    ("f06", include_str!("../../fixtures/f06.txt")),
    ("f07", include_str!("../../fixtures/f07.txt")),
    ("f08", include_str!("../../fixtures/f08.txt")),
    ("f09", include_str!("../../fixtures/f09.txt")),
    ("f10", include_str!("../../fixtures/f10.txt")),
    ("f11", include_str!("../../fixtures/f11.txt")),
    ("f12", include_str!("../../fixtures/f12.txt")),
    ("f13", include_str!("../../fixtures/f13.txt")),
    ("gem", include_str!("../../fixtures/gem.txt")),
    ("diamond", include_str!("../../fixtures/diamond.txt")),
    ("paw", include_str!("../../fixtures/paw.txt")),
    ("full_house", include_str!("../../fixtures/full_house.txt")),
    ("mvs3a", include_str!("../../fixtures/mvs3a.txt")),
    ("sp1", include_str!("../../fixtures/sp1.txt")),
    ("pt1", include_str!("../../fixtures/pt1.txt")),
    ("bga", include_str!("../../fixtures/bga.txt")),
    ("mvs2_c", include_str!("../../fixtures/mvs2_c.txt")),
    ("mvs2_d", include_str!("../../fixtures/mvs2_d.txt")),
    ("mvs12_a", include_str!("../../fixtures/mvs12_a.txt")),
    ("mvs12_b", include_str!("../../fixtures/mvs12_b.txt")),
    ("mvs12_c", include_str!("../../fixtures/mvs12_c.txt")),
    ("diam3a_d", include_str!("../../fixtures/diam3a_d.txt")),
    ("diam3b_b", include_str!("../../fixtures/diam3b_b.txt")),
    ("diam3b_c", include_str!("../../fixtures/diam3b_c.txt")),
];

/// A fixture graph by name.
pub fn fixture(name: &str) -> Result<Graph> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(k, _)| *k == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
    parse_edge_list(text)
}

fn fixed(name: &str) -> Graph {
    fixture(name).expect("fixtures are validated by tests")
}

pub fn full_house() -> Graph {
    fixed("full_house")
}

pub fn diamond() -> Graph {
    fixed("diamond")
}

pub fn gem() -> Graph {
    fixed("gem")
}

pub fn paw() -> Graph {
    fixed("paw")
}

pub fn sp1() -> Graph {
    fixed("sp1")
}

pub fn pt1() -> Graph {
    fixed("pt1")
}

pub fn bga() -> Graph {
    fixed("bga")
}

/// The five-vertex graph whose size-3 separator forces λ₂ ≈ −0.44949.
pub fn mvs3a() -> Graph {
    fixed("mvs3a")
}

/// Forbidden graph `F_i`, `1 <= i <= 13`.
pub fn forbidden(i: usize) -> Result<Graph> {
    if !(1..=13).contains(&i) {
        return Err(Error::InvalidParams(format!(
            "forbidden index {i} not in 1..=13"
        )));
    }
    fixture(&format!("f{i:02}"))
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::VertexCount(n))
    } else {
        Ok(())
    }
}

/// Adds a clique on `vs` to an edge list.
fn clique_edges(edges: &mut Vec<(usize, usize)>, vs: impl Iterator<Item = usize> + Clone) {
    for (i, u) in vs.clone().enumerate() {
        for v in vs.clone().skip(i + 1) {
            edges.push((u, v));
        }
    }
}

/// `SP^t`: a full house on `0..5` (K4 on `0..4`, vertex 4 adjacent to 1
/// and 3) with `t` pendant vertices at 3.
pub fn sp_t(t: usize) -> Result<Graph> {
    let n = 5 + t;
    check_size(n)?;
    let mut edges = Vec::new();
    clique_edges(&mut edges, 0..4);
    edges.extend([(4, 1), (4, 3)]);
    edges.extend((5..n).map(|v| (3, v)));
    Graph::from_edges(n, &edges)
}

/// `BG(p, q, 3, 2, 2)`: vertices 0 (pendant), 1, 2 (triangle with 3),
/// then `K_p` on `3..3+p`, then `K_q`; the last vertex of `K_p` is joined
/// to the first vertex of `K_q`.
pub fn bg322(p: usize, q: usize) -> Result<Graph> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParams("bg322 needs p, q >= 2".into()));
    }
    let n = 3 + p + q;
    check_size(n)?;
    let d = 3;
    let h = 3 + p - 1;
    let i = 3 + p;
    let mut edges = vec![(0, d), (1, d), (1, 2), (2, d), (h, i)];
    clique_edges(&mut edges, d..d + p);
    clique_edges(&mut edges, i..i + q);
    Graph::from_edges(n, &edges)
}

/// Block graph whose blocks have the given sizes and all contain vertex 0.
pub fn block_star(block_sizes: &[usize]) -> Result<Graph> {
    if block_sizes.is_empty() || block_sizes.iter().any(|&b| b < 2) {
        return Err(Error::InvalidParams("block sizes must be >= 2".into()));
    }
    let parts = block_sizes
        .iter()
        .map(|&b| complete(b - 1))
        .collect::<Result<Vec<_>>>()?;
    join(&complete(1)?, &disjoint_union_all(&parts)?)
}

/// Parameters of a relaxed block star: a universal vertex joined to
/// `copies` copies of `K_size` for each `(size, copies)` in `cliques`,
/// `q` paws and `s` paths `P3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelaxedBlockStarSpec {
    pub cliques: Vec<(usize, usize)>,
    pub q: usize,
    pub s: usize,
}

impl RelaxedBlockStarSpec {
    pub fn vertex_count(&self) -> usize {
        1 + self.cliques.iter().map(|(r, p)| r * p).sum::<usize>() + 4 * self.q + 3 * self.s
    }
}

/// Vertex 0 is universal. Then the clique copies, then each paw as center,
/// pendant and the two ends of its triangle, then each `P3` as end, middle,
/// end.
pub fn relaxed_block_star(spec: &RelaxedBlockStarSpec) -> Result<Graph> {
    if spec.cliques.iter().any(|&(r, _)| r == 0) {
        return Err(Error::InvalidParams("clique sizes must be positive".into()));
    }
    let n = spec.vertex_count();
    check_size(n)?;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    let mut next = 1;
    for &(r, p) in &spec.cliques {
        for _ in 0..p {
            clique_edges(&mut edges, next..next + r);
            next += r;
        }
    }
    for _ in 0..spec.q {
        let c = next;
        edges.extend([(c, c + 1), (c, c + 2), (c, c + 3), (c + 2, c + 3)]);
        next += 4;
    }
    for _ in 0..spec.s {
        edges.extend([(next, next + 1), (next + 1, next + 2)]);
        next += 3;
    }
    Graph::from_edges(n, &edges)
}

/// `G(r, p, q) = K1 ⊕ (p K_r ∪ q paw)`.
pub fn g_rpq(r: usize, p: usize, q: usize) -> Result<Graph> {
    if r == 0 || p == 0 || q == 0 {
        return Err(Error::InvalidParams("g_rpq needs r, p, q >= 1".into()));
    }
    relaxed_block_star(&RelaxedBlockStarSpec {
        cliques: vec![(r, p)],
        q,
        s: 0,
    })
}

/// The 5-class distance equitable partition of `G(r, p, q)`: universal
/// vertex, clique vertices, paw centers, paw pendants, paw triangle ends.
pub fn g_rpq_partition(r: usize, p: usize, q: usize) -> Vec<Vec<usize>> {
    let base = 1 + r * p;
    let paws = |offsets: &[usize]| -> Vec<usize> {
        (0..q)
            .flat_map(|k| offsets.iter().map(move |o| base + 4 * k + o))
            .collect()
    };
    vec![
        vec![0],
        (1..base).collect(),
        paws(&[0]),
        paws(&[1]),
        paws(&[2, 3]),
    ]
}

/// Triple block graph `Pt2(p, q)`: a full house on `0..5` whose size-2
/// separator is `{3, 4}` (vertex 0 is adjacent to 3 and 4 only, `0..5`
/// minus 0 is a K4), with `p` further vertices forming a clique with 3 and
/// `q` further vertices forming a clique with 4.
pub fn pt2(p: usize, q: usize) -> Result<Graph> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParams("pt2 needs p, q >= 2".into()));
    }
    let n = 5 + p + q;
    check_size(n)?;
    let mut edges = vec![(0, 3), (0, 4)];
    clique_edges(&mut edges, 1..5);
    clique_edges(&mut edges, std::iter::once(3).chain(5..5 + p));
    clique_edges(&mut edges, std::iter::once(4).chain(5 + p..n));
    Graph::from_edges(n, &edges)
}

/// The 4-class equitable partition of `Pt2(r, r)`.
pub fn pt2_partition(r: usize) -> Vec<Vec<usize>> {
    vec![vec![0], vec![1, 2], vec![3, 4], (5..5 + 2 * r).collect()]
}

fn want(name: &str, params: &[usize], k: usize) -> Result<()> {
    if params.len() == k {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "{name} takes {k} parameter(s), got {}",
            params.len()
        )))
    }
}

/// Builds a named graph. Parameterized families read their parameters from
/// `params`; `relaxed_block_star` takes `q, s` followed by `(size, copies)`
/// pairs and `block_star` takes block sizes.
pub fn make_family(name: &str, params: &[usize]) -> Result<Graph> {
    let fixed_name = |stem: &str| -> Result<Graph> {
        want(name, params, 0)?;
        fixture(stem)
    };
    match name {
        "full_house" | "diamond" | "gem" | "paw" | "sp1" | "bga" | "pt1" | "mvs3a" => {
            fixed_name(name)
        }
        "sp_t" => {
            want(name, params, 1)?;
            sp_t(params[0])
        }
        "bg322" => {
            want(name, params, 2)?;
            bg322(params[0], params[1])
        }
        "block_star" => block_star(params),
        "g_rpq" => {
            want(name, params, 3)?;
            g_rpq(params[0], params[1], params[2])
        }
        "relaxed_block_star" => {
            if params.len() < 2 || !params.len().is_multiple_of(2) {
                return Err(Error::InvalidParams(
                    "relaxed_block_star takes q, s and then (size, copies) pairs".into(),
                ));
            }
            let spec = RelaxedBlockStarSpec {
                q: params[0],
                s: params[1],
                cliques: params[2..].chunks(2).map(|c| (c[0], c[1])).collect(),
            };
            relaxed_block_star(&spec)
        }
        "pt2" => {
            want(name, params, 2)?;
            pt2(params[0], params[1])
        }
        "forbidden" => {
            want(name, params, 1)?;
            forbidden(params[0])
        }
        "complete" | "path" | "cycle" => {
            want(name, params, 1)?;
            match name {
                "complete" => complete(params[0]),
                "path" => path(params[0]),
                _ => cycle(params[0]),
            }
        }
        other => match FIXTURES.iter().find(|(k, _)| *k == other) {
            Some(_) => fixed_name(other),
            None => Err(Error::UnknownFamily(other.to_string())),
        },
    }
}

/// Names accepted by [`make_family`].
pub const FAMILY_NAMES: &[&str] = &[
    "full_house",
    "diamond",
    "gem",
    "paw",
    "sp1",
    "sp_t",
    "bga",
    "bg322",
    "block_star",
    "g_rpq",
    "relaxed_block_star",
    "pt1",
    "pt2",
    "mvs3a",
    "forbidden",
    "complete",
    "path",
    "cycle",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{blocks, is_block_graph, is_split};
    use crate::graph::{is_isomorphic, DistanceMatrix};

    #[test]
    fn fixture_checksums() {
        let expected: &[(&str, usize, usize, &[usize])] = &[
            ("f01", 6, 5, &[4, 2, 1, 1, 1, 1]),
            ("f02", 6, 5, &[3, 3, 1, 1, 1, 1]),
            ("f03", 6, 5, &[3, 2, 2, 1, 1, 1]),
            ("f04", 7, 6, &[3, 2, 2, 2, 1, 1, 1]),
            ("f05", 6, 6, &[3, 3, 2, 2, 1, 1]),
            ("f06", 7, 7, &[4, 3, 3, 1, 1, 1, 1]),
            ("f07", 7, 8, &[5, 2, 2, 2, 2, 2, 1]),
            ("f08", 7, 8, &[4, 4, 2, 2, 2, 1, 1]),
            ("f09", 5, 6, &[3, 3, 3, 2, 1]),
            ("f10", 6, 7, &[4, 3, 2, 2, 2, 1]),
            ("f11", 5, 7, &[4, 3, 3, 2, 2]),
            ("f12", 5, 7, &[4, 4, 2, 2, 2]),
            ("f13", 6, 10, &[4, 4, 4, 4, 2, 2]),
            ("gem", 5, 7, &[4, 3, 3, 2, 2]),
            ("diamond", 4, 5, &[3, 3, 2, 2]),
            ("paw", 4, 4, &[3, 2, 2, 1]),
            ("full_house", 5, 8, &[4, 4, 3, 3, 2]),
            ("mvs3a", 5, 9, &[4, 4, 4, 3, 3]),
            ("sp1", 8, 11, &[6, 5, 3, 3, 2, 1, 1, 1]),
            ("pt1", 9, 13, &[7, 5, 3, 3, 2, 2, 2, 1, 1]),
            ("bga", 9, 10, &[4, 4, 2, 2, 2, 2, 2, 1, 1]),
            ("mvs2_c", 6, 12, &[5, 5, 4, 4, 4, 2]),
            ("mvs2_d", 6, 11, &[5, 5, 3, 3, 3, 3]),
            ("mvs12_a", 6, 9, &[4, 4, 3, 3, 3, 1]),
            ("mvs12_b", 6, 9, &[4, 4, 4, 3, 2, 1]),
            ("mvs12_c", 6, 9, &[5, 4, 3, 3, 2, 1]),
            ("diam3a_d", 8, 11, &[4, 4, 3, 3, 2, 2, 2, 2]),
            ("diam3b_b", 8, 10, &[6, 4, 2, 2, 2, 2, 1, 1]),
            ("diam3b_c", 9, 13, &[7, 4, 3, 3, 3, 2, 2, 1, 1]),
        ];
        assert_eq!(expected.len(), FIXTURES.len());
        for &(name, n, m, degrees) in expected {
            let g = fixture(name).unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, m), "{name}");
            assert_eq!(g.degree_sequence(), degrees, "{name}");
            assert!(g.is_connected(), "{name}");
        }
    }

    #[test]
    fn named_small_graphs() {
        let k1 = complete(1).unwrap();
        let paw_join = join(
            &k1,
            &disjoint_union_all(&[k1.clone(), complete(2).unwrap()]).unwrap(),
        );
        assert!(is_isomorphic(&paw(), &paw_join.unwrap()));
        assert!(is_isomorphic(
            &diamond(),
            &join(&k1, &path(3).unwrap()).unwrap()
        ));
        assert!(is_isomorphic(&gem(), &forbidden(11).unwrap()));
        let fh = join(
            &complete(2).unwrap(),
            &disjoint_union_all(&[complete(2).unwrap(), k1]).unwrap(),
        )
        .unwrap();
        assert!(is_isomorphic(&full_house(), &fh));
    }

    #[test]
    fn f12_is_k2_join_three_independent() {
        let f12 = forbidden(12).unwrap();
        let k2_3k1 = join(&complete(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert!(is_isomorphic(&f12, &k2_3k1));
    }

    #[test]
    fn g_rpq_small_case() {
        let g = g_rpq(1, 1, 1).unwrap();
        assert_eq!(g.n(), 6);
        let k1 = complete(1).unwrap();
        let expect = join(&k1, &disjoint_union_all(&[k1.clone(), paw()]).unwrap()).unwrap();
        assert!(is_isomorphic(&g, &expect));
        let part = g_rpq_partition(2, 3, 2);
        assert_eq!(
            part.iter().map(Vec::len).sum::<usize>(),
            g_rpq(2, 3, 2).unwrap().n()
        );
    }

    #[test]
    fn pt2_shape() {
        for r in 2..6 {
            let g = pt2(r, r).unwrap();
            assert_eq!(g.n(), 2 * r + 5);
            assert_eq!(g.diameter().unwrap(), 3);
            assert_eq!(blocks(&g).blocks.len(), 3);
        }
        assert!(pt2(1, 3).is_err());
    }

    #[test]
    fn pt2_distance_rows() {
        let d = DistanceMatrix::of(&pt2(2, 2).unwrap()).unwrap();
        assert_eq!(d.max(), 3);
        // the two attached cliques are three apart
        assert_eq!(d.get(5, 7), 3);
        assert_eq!(d.get(0, 5), 2);
        assert_eq!(d.get(1, 5), 2);
    }

    #[test]
    fn block_families() {
        assert!(is_block_graph(&bg322(2, 2).unwrap()));
        assert_eq!(bg322(3, 4).unwrap().n(), 10);
        assert!(is_block_graph(&bga()));
        assert_eq!(blocks(&bga()).blocks.len(), 6);
        let bs = block_star(&[2, 3, 4]).unwrap();
        assert_eq!(bs.n(), 7);
        assert_eq!(blocks(&bs).blocks.len(), 3);
        assert!(is_split(&sp1()));
        assert_eq!(sp_t(0).unwrap(), full_house_labelled());
    }

    fn full_house_labelled() -> Graph {
        Graph::from_edges(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 1),
                (4, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sp1_contains_sp2_plus_pendant() {
        assert!(crate::graph::contains_induced(&sp_t(2).unwrap(), &sp1()));
    }

    #[test]
    fn relaxed_example_graph() {
        // universal vertex over K1, K3, a paw and a P3
        let spec = RelaxedBlockStarSpec {
            cliques: vec![(1, 1), (3, 1)],
            q: 1,
            s: 1,
        };
        let g = relaxed_block_star(&spec).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(g.universal_vertices().to_vec(), vec![0]);
        assert_eq!(g.diameter().unwrap(), 2);
    }

    #[test]
    fn make_family_dispatch() {
        assert_eq!(make_family("pt2", &[2, 3]).unwrap(), pt2(2, 3).unwrap());
        assert_eq!(make_family("forbidden", &[12]).unwrap().edge_count(), 7);
        assert!(matches!(
            make_family("nope", &[]),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            make_family("pt2", &[2]),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            make_family("forbidden", &[14]),
            Err(Error::InvalidParams(_))
        ));
        assert_eq!(
            make_family("relaxed_block_star", &[1, 1, 1, 1, 3, 1])
                .unwrap()
                .n(),
            12
        );
        assert_eq!(make_family("mvs2_d", &[]).unwrap().n(), 6);
        for name in FAMILY_NAMES {
            let _ = make_family(name, &[2, 2]);
        }
    }
}
