//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests; the `dlambda` binary wires it to the process.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::chordal::{
    is_block_graph, is_chordal, is_ptolemaic, is_split, minimal_vertex_separators,
};
use crate::classify::{
    classify_structural, cross_validate_order, Classification, OrderSummary, Verdict,
};
use crate::error::{Error, Result};
use crate::families::{
    make_family, verify_divisor_g_rpq, verify_divisor_pt2, verify_factorization_main,
    verify_factorization_p3, verify_factorization_pt2, verify_sturm_proof_main,
    RelaxedBlockStarSpec, FAMILY_NAMES,
};
use crate::graph::{
    parse_edge_list, parse_graph6, to_graph6, Graph, MAX_ENUMERATION, MIN_ENUMERATION,
};
use crate::poly::IntPolynomial;
use crate::spectral::{decide_from_charpoly, distance_charpoly, distance_spectrum, DEFAULT_TOL};

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "dlambda",
    version,
    about = "Decide whether the second largest distance eigenvalue of a connected graph is below -1/2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// One graph6 string per line.
    Graph6,
    /// One edge list per file: `n m` header then `u v` lines.
    Edges,
}

#[derive(clap::Args, Debug)]
pub struct InputArgs {
    /// Input files; standard input when none are given.
    pub files: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: InputFormat,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Convergence tolerance of the floating-point eigensolver.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural and exact verdicts for each input graph.
    Check(InputArgs),
    /// Distance eigenvalues and the exact characteristic polynomial.
    Spectrum(InputArgs),
    /// Print a named graph as graph6.
    Family {
        /// One of the names listed by `dlambda family list`.
        name: String,
        params: Vec<usize>,
    },
    /// Cross-validate the classifier on every connected graph up to `max-n` vertices.
    Enumerate {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Keep one graph per isomorphism class.
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        json: bool,
    },
    /// Re-run the exact factorization and root-location checks over a grid.
    VerifyTheorems {
        /// Upper bound for r, p and q of G(r, p, q).
        #[arg(long, default_value_t = 3)]
        max_rpq: usize,
        /// Upper bound for r of Pt2(r, r) (from 2).
        #[arg(long, default_value_t = 5)]
        max_pt2: usize,
        /// Upper bound for the number of P3 components (from 2).
        #[arg(long, default_value_t = 4)]
        max_s: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MvsSummary {
    pub size: usize,
    pub multiplicity: usize,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub structural_us: u128,
    pub exact_us: u128,
    pub float_us: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub input: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub chordal: bool,
    pub ptolemaic: bool,
    pub split: bool,
    pub block_graph: bool,
    /// Empty for non-chordal graphs.
    pub mvs: Vec<MvsSummary>,
    pub classification: Classification,
    /// Absent only for K1.
    pub exact: Option<Verdict>,
    pub lambda2: Option<f64>,
    pub agree: Option<bool>,
    pub timings: Timings,
}

/// Builds the report for one connected graph.
pub fn check_report(input: &str, g: &Graph, tol: f64) -> Result<Report> {
    let t = Instant::now();
    let classification = classify_structural(g)?;
    let structural_us = t.elapsed().as_micros();
    let chordal = is_chordal(g);
    let mvs = if chordal {
        minimal_vertex_separators(g)?
            .iter()
            .map(|(s, mu)| MvsSummary {
                size: s.len(),
                multiplicity: mu,
                vertices: s.to_vec(),
            })
            .collect()
    } else {
        Vec::new()
    };
    let t = Instant::now();
    let exact = if g.n() >= 2 {
        Some(Verdict::from_bool(decide_from_charpoly(
            &distance_charpoly(g)?,
        )?))
    } else {
        None
    };
    let exact_us = t.elapsed().as_micros();
    let t = Instant::now();
    let lambda2 = if g.n() >= 2 {
        Some(distance_spectrum(g, tol)?.values[1])
    } else {
        None
    };
    let float_us = t.elapsed().as_micros();
    Ok(Report {
        schema: SCHEMA,
        input: input.to_string(),
        graph6: to_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        diameter: g.diameter()?,
        chordal,
        ptolemaic: is_ptolemaic(g),
        split: is_split(g),
        block_graph: is_block_graph(g),
        mvs,
        agree: exact.map(|e| e == classification.verdict),
        classification,
        exact,
        lambda2,
        timings: Timings {
            structural_us,
            exact_us,
            float_us,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub schema: u32,
    pub input: String,
    pub eigenvalues: Vec<f64>,
    pub charpoly: IntPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub check: String,
    pub params: Vec<usize>,
    pub passed: bool,
    pub detail: String,
}

/// Every check run by `verify-theorems`.
pub fn theorem_table(max_rpq: usize, max_pt2: usize, max_s: usize) -> Vec<TheoremRow> {
    fn row<T>(
        check: &str,
        params: Vec<usize>,
        r: Result<T>,
        ok: impl Fn(&T) -> bool,
    ) -> TheoremRow {
        let (passed, detail) = match r {
            Ok(v) => (ok(&v), String::new()),
            Err(e) => (false, e.to_string()),
        };
        TheoremRow {
            check: check.into(),
            params,
            passed,
            detail,
        }
    }
    let mut rows = Vec::new();
    for r in 1..=max_rpq {
        for p in 1..=max_rpq {
            for q in 1..=max_rpq {
                let ps = vec![r, p, q];
                rows.push(row(
                    "factorization_main",
                    ps.clone(),
                    verify_factorization_main(r, p, q),
                    |_| true,
                ));
                rows.push(row(
                    "sturm_proof_main",
                    ps.clone(),
                    verify_sturm_proof_main(r, p, q),
                    |_| true,
                ));
                rows.push(row(
                    "divisor_g_rpq",
                    ps,
                    verify_divisor_g_rpq(r, p, q),
                    |b| *b,
                ));
            }
        }
    }
    for r in 2..=max_pt2 {
        rows.push(row(
            "factorization_pt2",
            vec![r],
            verify_factorization_pt2(r),
            |_| true,
        ));
        rows.push(row("divisor_pt2", vec![r], verify_divisor_pt2(r), |b| *b));
    }
    for s in 2..=max_s {
        for cliques in [vec![], vec![(3, 1)], vec![(2, 2)]] {
            let spec = RelaxedBlockStarSpec { cliques, q: 0, s };
            let params = std::iter::once(s)
                .chain(spec.cliques.iter().flat_map(|&(r, p)| [r, p]))
                .collect();
            rows.push(row(
                "factorization_p3",
                params,
                verify_factorization_p3(&spec),
                |_| true,
            ));
        }
    }
    rows
}

fn read_graphs(args: &InputArgs, stdin: &mut dyn BufRead) -> Result<Vec<(String, Graph)>> {
    let mut sources: Vec<(String, String)> = Vec::new();
    if args.files.is_empty() {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidParams(format!("stdin: {e}")))?;
        sources.push(("stdin".into(), text));
    } else {
        for f in &args.files {
            let text = fs::read_to_string(f)
                .map_err(|e| Error::InvalidParams(format!("{}: {e}", f.display())))?;
            sources.push((f.display().to_string(), text));
        }
    }
    let mut out = Vec::new();
    for (name, text) in sources {
        match args.format {
            InputFormat::Edges => out.push((name, parse_edge_list(&text)?)),
            InputFormat::Graph6 => {
                for (i, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    out.push((format!("{name}:{}", i + 1), parse_graph6(line)?));
                }
            }
        }
    }
    Ok(out)
}

fn json_line<T: Serialize>(out: &mut dyn Write, v: &T) {
    let _ = writeln!(out, "{}", serde_json::to_string(v).expect("serializable"));
}

fn cmd_check(args: &InputArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let mut code = EXIT_OK;
    for (name, g) in read_graphs(args, stdin)? {
        let rep = check_report(&name, &g, args.tol)?;
        if rep.agree == Some(false) {
            code = EXIT_CHECK_FAILED;
        }
        if args.json {
            json_line(out, &rep);
            continue;
        }
        let _ = writeln!(
            out,
            "{name}  {}  n={} m={} diameter={}",
            rep.graph6, rep.n, rep.m, rep.diameter
        );
        let _ = writeln!(
            out,
            "  chordal={} ptolemaic={} split={} block={}",
            rep.chordal, rep.ptolemaic, rep.split, rep.block_graph
        );
        let mvs: Vec<String> = rep
            .mvs
            .iter()
            .map(|s| format!("{:?}x{}", s.vertices, s.multiplicity))
            .collect();
        let _ = writeln!(
            out,
            "  mvs: {}",
            if mvs.is_empty() {
                "-".into()
            } else {
                mvs.join(" ")
            }
        );
        let c = &rep.classification;
        let _ = writeln!(out, "  structural: {} ({})", c.verdict, c.reason);
        let _ = writeln!(out, "  certificate: {:?}", c.certificate);
        if let (Some(e), Some(l)) = (rep.exact, rep.lambda2) {
            let _ = writeln!(out, "  exact: {e}  lambda2 ~ {l:.6}");
        }
    }
    Ok(code)
}

fn cmd_spectrum(args: &InputArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    for (name, g) in read_graphs(args, stdin)? {
        let rep = SpectrumReport {
            schema: SCHEMA,
            input: name,
            eigenvalues: distance_spectrum(&g, args.tol)?.values,
            charpoly: distance_charpoly(&g)?,
        };
        if args.json {
            json_line(out, &rep);
        } else {
            let ev: Vec<String> = rep.eigenvalues.iter().map(|x| format!("{x:.6}")).collect();
            let _ = writeln!(out, "{}: {}", rep.input, ev.join(" "));
            let _ = writeln!(out, "  charpoly: {}", rep.charpoly);
        }
    }
    Ok(EXIT_OK)
}

fn print_summary(out: &mut dyn Write, s: &OrderSummary) {
    let _ = writeln!(
        out,
        "n={}  graphs={}  satisfies={}  violates={}  disagreements={}",
        s.n,
        s.graphs,
        s.satisfies,
        s.violates,
        s.disagreements.len()
    );
    for g6 in &s.disagreements {
        let _ = writeln!(out, "  {g6}");
    }
}

fn cmd_enumerate(
    max_n: usize,
    jobs: usize,
    canonical: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    if !(MIN_ENUMERATION..=MAX_ENUMERATION).contains(&max_n) {
        return Err(Error::InvalidParams(format!(
            "max-n must be in {MIN_ENUMERATION}..={MAX_ENUMERATION}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    let summaries = pool.install(|| {
        (2..=max_n)
            .map(|n| cross_validate_order(n, canonical))
            .collect::<Result<Vec<_>>>()
    })?;
    if json {
        json_line(
            out,
            &serde_json::json!({ "schema": SCHEMA, "orders": summaries }),
        );
    } else {
        for s in &summaries {
            print_summary(out, s);
        }
    }
    Ok(if summaries.iter().all(|s| s.disagreements.is_empty()) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_verify(
    max_rpq: usize,
    max_pt2: usize,
    max_s: usize,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    if max_rpq < 1 || max_pt2 < 2 || max_s < 2 {
        return Err(Error::InvalidParams(
            "need max-rpq >= 1, max-pt2 >= 2, max-s >= 2".into(),
        ));
    }
    let rows = theorem_table(max_rpq, max_pt2, max_s);
    if json {
        json_line(out, &serde_json::json!({ "schema": SCHEMA, "rows": rows }));
    } else {
        for r in &rows {
            let mark = if r.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{mark}  {:<20} {:?} {}", r.check, r.params, r.detail);
        }
        let passed = rows.iter().filter(|r| r.passed).count();
        let _ = writeln!(out, "{passed}/{} checks passed", rows.len());
    }
    Ok(if rows.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

/// Parses `args` (program name first) and runs the subcommand. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT_ERROR
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a, stdin, out),
        Command::Spectrum(a) => cmd_spectrum(a, stdin, out),
        Command::Family { name, params } if name == "list" => {
            for f in FAMILY_NAMES {
                let _ = writeln!(out, "{f}");
            }
            let _ = params;
            Ok(EXIT_OK)
        }
        Command::Family { name, params } => make_family(name, params).map(|g| {
            let _ = writeln!(out, "{}", to_graph6(&g));
            EXIT_OK
        }),
        Command::Enumerate {
            max_n,
            jobs,
            canonical,
            json,
        } => cmd_enumerate(*max_n, *jobs, *canonical, *json, out),
        Command::VerifyTheorems {
            max_rpq,
            max_pt2,
            max_s,
            json,
        } => cmd_verify(*max_rpq, *max_pt2, *max_s, *json, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("dlambda").chain(args.iter().copied()),
            &mut stdin,
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn family_then_check() {
        let (code, g6, _) = run_str(&["family", "pt1"], "");
        assert_eq!(code, 0);
        let (code, out, _) = run_str(&["check", "--json"], &g6);
        assert_eq!(code, 0);
        let rep: Report = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(rep.classification.verdict, Verdict::Satisfies);
        assert!((rep.lambda2.unwrap() + 0.50228).abs() < 1e-4);
        let again: Report = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
        assert_eq!(again, rep);
    }

    #[test]
    fn input_errors_exit_2() {
        let (code, _, err) = run_str(&["check"], "not graph6 ~~~\n");
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
        // two isolated vertices
        let (code, _, err) = run_str(&["check"], "A?\n");
        assert_eq!(code, 2, "{err}");
        assert!(err.contains("disconnected"));
        assert_eq!(run_str(&["family", "nope"], "").0, 2);
        assert_eq!(run_str(&["bogus"], "").0, 2);
    }

    #[test]
    fn small_verify_grid() {
        let (code, out, _) = run_str(
            &[
                "verify-theorems",
                "--max-rpq",
                "1",
                "--max-pt2",
                "2",
                "--max-s",
                "2",
            ],
            "",
        );
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("checks passed"));
    }
}
