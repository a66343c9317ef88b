//! Structural decision procedure for λ₂ < −1/2 on connected graphs, with a
//! certificate for every verdict, and cross-validation against the exact
//! spectral test.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chordal::{
    blocks, chordality, is_block_graph, is_chordless_cycle, minimal_vertex_separators, Chordality,
};
use crate::error::{Error, Result};
use crate::families::{
    bg322, bga, fixture, is_bg322_subgraph, is_bga_subgraph, is_block_star, is_loose_block_graph,
    pt1, pt2, relaxed_block_star_center,
};
use crate::graph::{
    find_induced_embedding, labeled_in_range, labeled_mask_count, to_graph6, Graph, VertexSet,
    MAX_ENUMERATION, MIN_ENUMERATION,
};
use crate::poly::IntPolynomial;
use crate::spectral::{decide_from_charpoly, distance_charpoly, lambda2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Satisfies,
    Violates,
}

impl Verdict {
    pub fn from_bool(satisfies: bool) -> Self {
        if satisfies {
            Verdict::Satisfies
        } else {
            Verdict::Violates
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Satisfies => "satisfies",
            Verdict::Violates => "violates",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    TrivialK1,
    NotChordal,
    MvsCard3,
    MvsCard2Mult2,
    DiameterOver3,
    /// Catalog name: `F1`..`F13`, `gem` or `mvs3a`.
    ForbiddenSubgraph(String),
    BlockStar,
    LooseBlockGraph,
    BG322Subgraph,
    BGASubgraph,
    RelaxedBlockStarSubgraph,
    Pt1Subgraph,
    Pt2Subgraph,
    /// Not an induced subgraph of any host family member, and no catalog
    /// graph was found inside.
    FamilyNonMembership,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::ForbiddenSubgraph(name) => write!(f, "forbidden subgraph {name}"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// Evidence backing a classification, in the input labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    None,
    Cycle(Vec<usize>),
    /// Minimal vertex separator with its clique-tree multiplicity.
    Separator {
        set: Vec<usize>,
        multiplicity: usize,
    },
    DistancePair {
        u: usize,
        v: usize,
        distance: u32,
    },
    /// `map[i]` is the vertex of `g` playing catalog vertex `i`.
    Forbidden {
        name: String,
        map: Vec<usize>,
    },
    /// `map[i]` is the host vertex of vertex `i` of `g`.
    Host {
        host: String,
        params: Vec<usize>,
        map: Vec<usize>,
    },
    UniversalVertex {
        center: usize,
    },
    CommonVertex {
        vertex: usize,
    },
    UnitSeparators(Vec<usize>),
    NonMembership {
        hosts: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub reason: Reason,
    pub certificate: Certificate,
}

impl Classification {
    fn sat(reason: Reason, certificate: Certificate) -> Self {
        Classification {
            verdict: Verdict::Satisfies,
            reason,
            certificate,
        }
    }

    fn viol(reason: Reason, certificate: Certificate) -> Self {
        Classification {
            verdict: Verdict::Violates,
            reason,
            certificate,
        }
    }
}

/// Graphs searched for, in order, when a witness of violation is needed.
pub fn forbidden_catalog() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (1..=13)
        .map(|i| {
            (
                format!("F{i}"),
                fixture(&format!("f{i:02}")).expect("fixture"),
            )
        })
        .collect();
    out.push(("gem".into(), fixture("gem").expect("fixture")));
    out.push(("mvs3a".into(), fixture("mvs3a").expect("fixture")));
    out
}

fn catalog_graph(name: &str) -> Option<Graph> {
    forbidden_catalog()
        .into_iter()
        .find(|(k, _)| k == name)
        .map(|(_, g)| g)
}

/// First catalog graph that is an induced subgraph of `g`, with its
/// embedding.
pub fn find_forbidden_subgraph(g: &Graph) -> Option<(String, Vec<usize>)> {
    forbidden_catalog()
        .into_iter()
        .find_map(|(name, f)| find_induced_embedding(&f, g).map(|map| (name, map)))
}

fn forbidden_or(g: &Graph, hosts: &[&str]) -> Classification {
    match find_forbidden_subgraph(g) {
        Some((name, map)) => Classification::viol(
            Reason::ForbiddenSubgraph(name.clone()),
            Certificate::Forbidden { name, map },
        ),
        None => Classification::viol(
            Reason::FamilyNonMembership,
            Certificate::NonMembership {
                hosts: hosts.iter().map(|h| h.to_string()).collect(),
            },
        ),
    }
}

fn host_graph(host: &str, params: &[usize]) -> Option<Graph> {
    match (host, params) {
        ("pt1", []) => Some(pt1()),
        ("bga", []) => Some(bga()),
        ("pt2", [p, q]) => pt2(*p, *q).ok(),
        ("bg322", [p, q]) => bg322(*p, *q).ok(),
        _ => None,
    }
}

fn host_embedding(g: &Graph, host: &str, params: Vec<usize>) -> Option<Certificate> {
    let h = host_graph(host, &params)?;
    find_induced_embedding(g, &h).map(|map| Certificate::Host {
        host: host.into(),
        params,
        map,
    })
}

fn block_graph_case(g: &Graph) -> Classification {
    if is_block_star(g) {
        let common = blocks(g)
            .blocks
            .into_iter()
            .fold(g.vertices(), |acc, b| acc & b);
        let vertex = common.first().expect("block star has a common vertex");
        return Classification::sat(Reason::BlockStar, Certificate::CommonVertex { vertex });
    }
    if is_loose_block_graph(g) {
        let cut = blocks(g).cut_vertices.to_vec();
        return Classification::sat(Reason::LooseBlockGraph, Certificate::UnitSeparators(cut));
    }
    let m = g.n().max(2);
    if is_bg322_subgraph(g) {
        if let Some(c) = host_embedding(g, "bg322", vec![m, m]) {
            return Classification::sat(Reason::BG322Subgraph, c);
        }
    }
    if is_bga_subgraph(g) {
        if let Some(c) = host_embedding(g, "bga", vec![]) {
            return Classification::sat(Reason::BGASubgraph, c);
        }
    }
    forbidden_or(g, &["block star", "loose block graph", "bg322", "bga"])
}

/// The structural decision procedure. Expects a connected graph.
pub fn classify_structural(g: &Graph) -> Result<Classification> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if g.n() == 1 {
        return Ok(Classification::sat(Reason::TrivialK1, Certificate::None));
    }
    if let Chordality::Cycle(cycle) = chordality(g) {
        return Ok(Classification::viol(
            Reason::NotChordal,
            Certificate::Cycle(cycle),
        ));
    }
    let mvs = minimal_vertex_separators(g)?;
    if mvs.all_unitary() {
        return Ok(block_graph_case(g));
    }
    let separator = |set: VertexSet, multiplicity| Certificate::Separator {
        set: set.to_vec(),
        multiplicity,
    };
    if let Some((s, mu)) = mvs.iter().find(|(s, _)| s.len() >= 3) {
        return Ok(Classification::viol(Reason::MvsCard3, separator(s, mu)));
    }
    if let Some((s, mu)) = mvs.iter().find(|&(s, mu)| s.len() == 2 && mu >= 2) {
        return Ok(Classification::viol(
            Reason::MvsCard2Mult2,
            separator(s, mu),
        ));
    }
    let d = g.distances()?;
    let diameter = d.max();
    if diameter >= 4 {
        let (u, v) = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .find(|&(u, v)| d.get(u, v) == diameter)
            .expect("diameter is attained");
        return Ok(Classification::viol(
            Reason::DiameterOver3,
            Certificate::DistancePair {
                u,
                v,
                distance: diameter,
            },
        ));
    }
    if diameter <= 2 {
        return Ok(match relaxed_block_star_center(g) {
            Some(center) => Classification::sat(
                Reason::RelaxedBlockStarSubgraph,
                Certificate::UniversalVertex { center },
            ),
            None => forbidden_or(g, &["relaxed block star"]),
        });
    }
    let m = g.n().max(2);
    if let Some(c) = host_embedding(g, "pt2", vec![m, m]) {
        return Ok(Classification::sat(Reason::Pt2Subgraph, c));
    }
    if let Some(c) = host_embedding(g, "pt1", vec![]) {
        return Ok(Classification::sat(Reason::Pt1Subgraph, c));
    }
    Ok(forbidden_or(g, &["pt1", "pt2"]))
}

/// Components of `g − s` adjacent to every vertex of `s`.
fn full_components(g: &Graph, s: VertexSet) -> usize {
    g.components_within(g.vertices() - s)
        .into_iter()
        .filter(|&c| {
            let reach = c
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v));
            s.is_subset(reach)
        })
        .count()
}

fn is_embedding(pattern: &Graph, host: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    image.len() == map.len()
        && (0..map.len()).all(|i| {
            (i + 1..map.len()).all(|j| pattern.has_edge(i, j) == host.has_edge(map[i], map[j]))
        })
}

/// Re-checks a certificate against `g` without rerunning the classifier.
pub fn validate_certificate(g: &Graph, c: &Classification) -> bool {
    use Certificate as C;
    match (&c.reason, &c.certificate) {
        (Reason::TrivialK1, C::None) => g.n() == 1,
        (Reason::NotChordal, C::Cycle(cycle)) => is_chordless_cycle(g, cycle),
        (Reason::MvsCard3 | Reason::MvsCard2Mult2, C::Separator { set, multiplicity }) => {
            if set.iter().any(|&v| v >= g.n()) {
                return false;
            }
            let s: VertexSet = set.iter().copied().collect();
            let full = full_components(g, s);
            let size_ok = match c.reason {
                Reason::MvsCard3 => s.len() >= 3,
                _ => s.len() == 2 && *multiplicity >= 2,
            };
            size_ok && full >= 2 && full - 1 == *multiplicity
        }
        (Reason::DiameterOver3, C::DistancePair { u, v, distance }) => {
            *u < g.n()
                && *v < g.n()
                && *distance >= 4
                && g.distances().is_ok_and(|d| d.get(*u, *v) == *distance)
        }
        (Reason::ForbiddenSubgraph(name), C::Forbidden { name: n2, map }) => {
            name == n2 && catalog_graph(name).is_some_and(|f| is_embedding(&f, g, map))
        }
        (
            Reason::Pt1Subgraph | Reason::Pt2Subgraph | Reason::BG322Subgraph | Reason::BGASubgraph,
            C::Host { host, params, map },
        ) => {
            let expected = match c.reason {
                Reason::Pt1Subgraph => "pt1",
                Reason::Pt2Subgraph => "pt2",
                Reason::BG322Subgraph => "bg322",
                _ => "bga",
            };
            host == expected && host_graph(host, params).is_some_and(|h| is_embedding(g, &h, map))
        }
        (Reason::RelaxedBlockStarSubgraph, C::UniversalVertex { center }) => {
            *center < g.n()
                && relaxed_block_star_center(g).is_some()
                && g.universal_vertices().contains(*center)
        }
        (Reason::BlockStar, C::CommonVertex { vertex }) => {
            *vertex < g.n()
                && is_block_graph(g)
                && blocks(g).blocks.iter().all(|b| b.contains(*vertex))
        }
        (Reason::LooseBlockGraph, C::UnitSeparators(cut)) => {
            is_block_graph(g)
                && *cut == blocks(g).cut_vertices.to_vec()
                && cut
                    .iter()
                    .all(|&v| full_components(g, VertexSet::singleton(v)) == 2)
        }
        (Reason::FamilyNonMembership, C::NonMembership { .. }) => {
            c.verdict == Verdict::Violates && find_forbidden_subgraph(g).is_none()
        }
        _ => false,
    }
}

/// Structural verdict next to the exact and floating spectral ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub structural: Verdict,
    pub exact: Verdict,
    pub lambda2: f64,
    pub agree: bool,
}

pub fn cross_validate(g: &Graph) -> Result<CrossValidation> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices);
    }
    let structural = classify_structural(g)?.verdict;
    let exact = Verdict::from_bool(decide_from_charpoly(&distance_charpoly(g)?)?);
    Ok(CrossValidation {
        structural,
        exact,
        lambda2: lambda2(g)?,
        agree: structural == exact,
    })
}

/// Tally of one enumeration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub n: usize,
    pub graphs: u64,
    pub satisfies: u64,
    pub violates: u64,
    /// graph6 strings, sorted.
    pub disagreements: Vec<String>,
}

impl OrderSummary {
    fn merge(mut self, other: OrderSummary) -> OrderSummary {
        self.graphs += other.graphs;
        self.satisfies += other.satisfies;
        self.violates += other.violates;
        self.disagreements.extend(other.disagreements);
        self
    }
}

/// Masks per parallel work item.
const CHUNK: u64 = 1 << 12;

/// Cross-validates every connected labeled graph on `n` vertices (or one
/// per isomorphism class with `canonical`). Exact verdicts are memoized
/// per worker by characteristic polynomial.
pub fn cross_validate_order(n: usize, canonical: bool) -> Result<OrderSummary> {
    if !(MIN_ENUMERATION..=MAX_ENUMERATION).contains(&n) {
        return Err(Error::EnumerationRange(n));
    }
    let total = labeled_mask_count(n);
    let chunks: Vec<Range<u64>> = (0..total.div_ceil(CHUNK))
        .map(|i| i * CHUNK..((i + 1) * CHUNK).min(total))
        .collect();
    let parts = chunks
        .into_par_iter()
        .map_init(HashMap::<IntPolynomial, bool>::new, |memo, range| {
            let mut s = OrderSummary {
                n,
                ..Default::default()
            };
            for g in labeled_in_range(n, range)? {
                if canonical && !crate::graph::is_canonical(&g) {
                    continue;
                }
                let structural = classify_structural(&g)?.verdict;
                let p = distance_charpoly(&g)?;
                let exact = match memo.get(&p) {
                    Some(&v) => v,
                    None => {
                        let v = decide_from_charpoly(&p)?;
                        memo.insert(p, v);
                        v
                    }
                };
                s.graphs += 1;
                match structural {
                    Verdict::Satisfies => s.satisfies += 1,
                    Verdict::Violates => s.violates += 1,
                }
                if structural != Verdict::from_bool(exact) {
                    s.disagreements.push(to_graph6(&g));
                }
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = parts.into_iter().fold(
        OrderSummary {
            n,
            ..Default::default()
        },
        OrderSummary::merge,
    );
    out.disagreements.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        block_star, forbidden, full_house, g_rpq, gem, mvs3a, pt2, relaxed_block_star, sp1,
        RelaxedBlockStarSpec,
    };
    use crate::graph::{complete, cycle, path};

    fn classify(g: &Graph) -> Classification {
        let c = classify_structural(g).unwrap();
        assert!(validate_certificate(g, &c), "{c:?}");
        c
    }

    #[test]
    fn gem_is_f11() {
        let c = classify(&gem());
        assert_eq!(c.verdict, Verdict::Violates);
        assert_eq!(c.reason, Reason::ForbiddenSubgraph("F11".into()));
    }

    #[test]
    fn mvs3a_has_size_three_separator() {
        let c = classify(&mvs3a());
        assert_eq!(c.reason, Reason::MvsCard3);
    }

    #[test]
    fn triple_block_is_pt2() {
        let c = classify(&pt2(2, 2).unwrap());
        assert_eq!(
            (c.verdict, c.reason),
            (Verdict::Satisfies, Reason::Pt2Subgraph)
        );
    }

    #[test]
    fn basic_cases() {
        assert_eq!(classify(&complete(1).unwrap()).reason, Reason::TrivialK1);
        assert_eq!(classify(&cycle(5).unwrap()).reason, Reason::NotChordal);
        assert_eq!(classify(&complete(5).unwrap()).reason, Reason::BlockStar);
        assert_eq!(classify(&path(5).unwrap()).reason, Reason::LooseBlockGraph);
        assert_eq!(
            classify(&full_house()).reason,
            Reason::RelaxedBlockStarSubgraph
        );
        assert_eq!(classify(&sp1()).verdict, Verdict::Satisfies);
        assert_eq!(
            classify(&block_star(&[3, 3, 2]).unwrap()).reason,
            Reason::BlockStar
        );
        let two = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(classify_structural(&two), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn catalog_search() {
        assert!(find_forbidden_subgraph(&complete(5).unwrap()).is_none());
        // the graph also holds F2, which comes first in catalog order
        let d = fixture("diam3a_d").unwrap();
        assert_eq!(find_forbidden_subgraph(&d).unwrap().0, "F2");
        assert!(find_induced_embedding(&forbidden(10).unwrap(), &d).is_some());
        let (name, _) = find_forbidden_subgraph(&fixture("mvs12_a").unwrap()).unwrap();
        assert_eq!(name, "F9");
    }

    #[test]
    fn forged_certificates_fail() {
        let g = gem();
        let mut c = classify(&g);
        if let Certificate::Forbidden { map, .. } = &mut c.certificate {
            map.swap(0, 2);
        }
        assert!(!validate_certificate(&g, &c));
        let fake = Classification::viol(
            Reason::MvsCard2Mult2,
            Certificate::Separator {
                set: vec![0, 1],
                multiplicity: 2,
            },
        );
        assert!(!validate_certificate(&full_house(), &fake));
    }

    #[test]
    fn agreement_on_families() {
        for g in [
            g_rpq(2, 2, 2).unwrap(),
            forbidden(10).unwrap(),
            relaxed_block_star(&RelaxedBlockStarSpec {
                cliques: vec![(2, 2)],
                q: 1,
                s: 2,
            })
            .unwrap(),
        ] {
            assert!(cross_validate(&g).unwrap().agree);
        }
    }

    #[test]
    fn small_orders_agree() {
        for n in 2..=5 {
            let s = cross_validate_order(n, false).unwrap();
            assert!(s.disagreements.is_empty(), "{:?}", s.disagreements);
            assert_eq!(s.graphs, s.satisfies + s.violates);
        }
        assert_eq!(cross_validate_order(4, true).unwrap().graphs, 6);
        assert!(cross_validate_order(8, false).is_err());
    }
}
