//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use dlambda::chordal::{
    build_clique_tree_with, is_block_graph, is_chordal, is_distance_hereditary, is_ptolemaic,
    minimal_vertex_separators, ptolemy_inequality_holds, TieBreak,
};
use dlambda::classify::{classify_structural, cross_validate_order, validate_certificate};
use dlambda::families::{
    diamond, f_polynomial, fixture, g_rpq, h_pi_polynomial, is_relaxed_block_star_subgraph, mvs3a,
    pt1, pt2, relaxed_block_star, relaxed_oracle_host, verify_factorization_main,
    verify_factorization_p3, verify_factorization_pt2, verify_sturm_proof_main,
    RelaxedBlockStarSpec,
};
use dlambda::graph::{contains_induced, enumerate_connected, Graph, VertexSet};
use dlambda::poly::{
    count_distinct_roots_in, descartes_sign_changes, real_roots, IntPolynomial, Point,
};
use dlambda::spectral::{
    decide_lambda2_lt_neg_half_exact, distance_spectrum, interlacing_holds, lambda2,
    twin_bounds_hold, DEFAULT_TOL,
};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn canonical_upto(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(|n| enumerate_connected(n, true).expect("valid order"))
        .collect()
}

fn grid() -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=4).flat_map(|r| (1..=4).flat_map(move |p| (1..=4).map(move |q| (r, p, q))))
}

fn p3_specs() -> Vec<RelaxedBlockStarSpec> {
    let mut out = Vec::new();
    for s in 2..=4 {
        for cliques in [vec![], vec![(3, 1)], vec![(2, 2), (4, 1)]] {
            for q in [0, 1] {
                out.push(RelaxedBlockStarSpec {
                    cliques: cliques.clone(),
                    q,
                    s,
                });
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let mut total = 0;
    for n in 2..=7 {
        let s = cross_validate_order(n, false).map_err(e)?;
        ensure(s.disagreements.is_empty(), || {
            format!(
                "n={n}: {} disagreements, first {}",
                s.disagreements.len(),
                s.disagreements[0]
            )
        })?;
        total += s.graphs;
    }
    Ok(format!("{total} connected labeled graphs, 0 disagreements"))
}

fn criterion_2() -> Outcome {
    let cases: [(&str, Graph, f64, f64); 6] = [
        ("mvs3a", mvs3a(), -0.44949, 1e-4),
        ("mvs2_d", fixture("mvs2_d").map_err(e)?, -0.4641, 1e-3),
        ("mvs12_c", fixture("mvs12_c").map_err(e)?, -0.51210, 1e-4),
        ("diam3b_b", fixture("diam3b_b").map_err(e)?, -0.50229, 1e-4),
        ("diam3b_c", fixture("diam3b_c").map_err(e)?, -0.49839, 1e-4),
        ("pt1", pt1(), -0.50228, 1e-4),
    ];
    for (name, g, want, tol) in cases {
        let got = lambda2(&g).map_err(e)?;
        ensure((got - want).abs() < tol, || {
            format!("{name}: lambda2 = {got}, expected {want}")
        })?;
        let exact = decide_lambda2_lt_neg_half_exact(&g).map_err(e)?;
        ensure(exact == (want < -0.5), || {
            format!("{name}: exact verdict {exact}")
        })?;
    }
    Ok("6 graphs within tolerance, exact signs consistent".into())
}

fn criterion_3() -> Outcome {
    let p = IntPolynomial::from_i64_desc(&[1, 7, 13, 5]);
    let roots: Vec<f64> = real_roots(&p, 1e-12)
        .map_err(e)?
        .into_iter()
        .map(|(r, _)| r.to_f64().unwrap_or(f64::NAN))
        .collect();
    let want = [-4.1701, -2.3111, -0.51881];
    ensure(roots.len() == 3, || format!("found roots {roots:?}"))?;
    for (got, w) in roots.iter().zip(want) {
        ensure((got - w).abs() < 1e-3, || format!("root {got} vs {w}"))?;
    }
    let below =
        count_distinct_roots_in(&p, &Point::NegInfinity, &Point::ratio(-1, 2)).map_err(e)?;
    ensure(below == 3, || format!("{below} roots below -1/2"))?;
    Ok(format!("roots {roots:.5?}, all 3 below -1/2"))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for (r, p, q) in grid() {
        verify_factorization_main(r, p, q).map_err(|x| format!("G({r},{p},{q}): {x}"))?;
        count += 1;
    }
    for r in 2..=8 {
        verify_factorization_pt2(r).map_err(|x| format!("Pt2({r},{r}): {x}"))?;
        count += 1;
    }
    for spec in p3_specs() {
        verify_factorization_p3(&spec).map_err(|x| format!("{spec:?}: {x}"))?;
        count += 1;
    }
    Ok(format!("{count} exact factorizations"))
}

fn criterion_5() -> Outcome {
    let half = BigRational::new((-1).into(), 2.into());
    let zero = BigRational::from_integer(0.into());
    for (r, p, q) in grid() {
        let f = f_polynomial(r, p, q);
        let (ri, pi, qi) = (r as i64, p as i64, q as i64);
        ensure(
            f.eval(&half) == BigRational::new((-(2 * ri + 1)).into(), 32.into()),
            || format!("f(-1/2) at ({r},{p},{q})"),
        )?;
        let e0 = (6 * ri + 6) * qi + 5 * ri * pi;
        ensure(
            f.eval(&zero) == BigRational::from_integer((-e0).into()),
            || format!("f(0) at ({r},{p},{q})"),
        )?;
        ensure(descartes_sign_changes(&f) == 1, || {
            format!("Descartes of f at ({r},{p},{q})")
        })?;
    }
    for r in 2..=10 {
        let h = h_pi_polynomial(r);
        let want = BigRational::new((-(4 * r as i64 + 1)).into(), 16.into());
        ensure(h.eval(&half) == want, || format!("P_H(-1/2) at r={r}"))?;
        ensure(descartes_sign_changes(&h) == 1, || {
            format!("Descartes of P_H at r={r}")
        })?;
    }
    Ok("64 quintics and 9 quartics".into())
}

fn criterion_6() -> Outcome {
    for (r, p, q) in grid() {
        let rep = verify_sturm_proof_main(r, p, q).map_err(|x| format!("({r},{p},{q}): {x}"))?;
        ensure(
            rep.pattern_at_neg_half[..3] == [-1, -1, 1] && rep.pattern_at_zero[..3] == [-1, -1, 1],
            || {
                format!(
                    "({r},{p},{q}): patterns {:?} {:?}",
                    rep.pattern_at_neg_half, rep.pattern_at_zero
                )
            },
        )?;
        let f = f_polynomial(r, p, q);
        let k = count_distinct_roots_in(&f, &Point::ratio(-1, 2), &Point::integer(0)).map_err(e)?;
        ensure(k == 0, || format!("({r},{p},{q}): {k} roots in (-1/2, 0]"))?;
    }
    Ok("64 cases, patterns (-,-,+,*) at -1/2 and 0, no roots in (-1/2, 0]".into())
}

fn connected_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    (1u64..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(move |s| s.len() >= 2 && g.component_within(s.first().unwrap(), *s) == *s)
}

fn criterion_7() -> Outcome {
    let graphs = canonical_upto(7);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut ptolemaic, mut subgraphs, mut chordal) = (0, 0, 0);
    let dia = diamond();
    for g in &graphs {
        let is_c = is_chordal(g);
        let mvs = if is_c {
            Some(minimal_vertex_separators(g).map_err(e)?)
        } else {
            None
        };
        // block-graph equivalence
        let a = is_block_graph(g);
        let b = is_c && !contains_induced(&dia, g);
        let c = mvs.as_ref().is_some_and(|m| m.all_unitary());
        ensure(a == b && b == c, || {
            format!("block equivalence fails on {g:?}")
        })?;
        // Ptolemaic equivalence
        let p1 = is_ptolemaic(g);
        let p2 = ptolemy_inequality_holds(g);
        let p3 = is_c && is_distance_hereditary(g);
        ensure(p1 == p2 && p2 == p3, || {
            format!("Ptolemaic equivalence fails on {g:?}")
        })?;
        if let Some(m) = &mvs {
            chordal += 1;
            for _ in 0..10 {
                let t = build_clique_tree_with(g, TieBreak::Random(&mut rng)).map_err(e)?;
                ensure(t.is_valid_for(g) && t.separators() == *m, || {
                    format!("separator multiset changes with the tree on {g:?}")
                })?;
            }
        }
        if p1 {
            ptolemaic += 1;
            let outer = distance_spectrum(g, DEFAULT_TOL).map_err(e)?;
            for s in connected_subsets(g) {
                let h = g.induced_subgraph(s).map_err(e)?;
                let inner = distance_spectrum(&h, DEFAULT_TOL).map_err(e)?;
                ensure(interlacing_holds(&outer, &inner).map_err(e)?, || {
                    format!("interlacing fails on {g:?} with {:?}", s.to_vec())
                })?;
                subgraphs += 1;
            }
        }
    }
    let mut members: Vec<Graph> = grid().map(|(r, p, q)| g_rpq(r, p, q).unwrap()).collect();
    members.extend((2..=8).map(|r| pt2(r, r).unwrap()));
    members.extend(p3_specs().iter().map(|s| relaxed_block_star(s).unwrap()));
    for g in &members {
        ensure(twin_bounds_hold(g).map_err(e)?, || {
            format!("twin bound fails on {g:?}")
        })?;
    }
    Ok(format!(
        "{} graphs; {ptolemaic} Ptolemaic with {subgraphs} subgraphs interlacing; \
         {chordal} chordal x 10 trees; {} family members twin-checked",
        graphs.len(),
        members.len()
    ))
}

fn criterion_8() -> Outcome {
    let graphs = canonical_upto(7);
    let hosts: Vec<Graph> = (0..=7).map(relaxed_oracle_host).collect();
    let mut violates = 0;
    for g in &graphs {
        let oracle = contains_induced(g, &hosts[g.n()]);
        ensure(is_relaxed_block_star_subgraph(g) == oracle, || {
            format!("recognizer {} vs oracle {oracle} on {g:?}", !oracle)
        })?;
        let c = classify_structural(g).map_err(e)?;
        if c.verdict == dlambda::classify::Verdict::Violates {
            violates += 1;
        }
        ensure(validate_certificate(g, &c), || {
            format!("certificate {c:?} fails on {g:?}")
        })?;
    }
    Ok(format!(
        "{} graphs agree with the embedding oracle; {violates} violation certificates re-validated",
        graphs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 exhaustive characterization n<=7", criterion_1),
        ("2 reference lambda2 values", criterion_2),
        ("3 cubic roots via Sturm", criterion_3),
        ("4 exact factorizations", criterion_4),
        ("5 closed-form identities", criterion_5),
        ("6 Sturm proof ledger", criterion_6),
        ("7 property suites", criterion_7),
        ("8 recognizer soundness", criterion_8),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        match f() {
            Ok(msg) => println!("PASS  {name}: {msg} ({:.1?})", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
