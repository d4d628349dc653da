//! Command-line front end for `knotted-core`: input parsing (catalog names,
//! PD text, JSON, @file), a rayon-parallel bracket evaluator, JSON output
//! schemas, and the selftest suite.

use std::fs;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use knotted_core::cabling::cable_diagram;
use knotted_core::diagram::{catalog, parse_pd, Crossing, CATALOG_NAMES};
use knotted_core::error::{Error, Result};
use knotted_core::jones::{
    bracket_from_counts, colored_jones_with, state_counts, StateCounts, DEFAULT_CAP,
};
use knotted_core::states::{state_graph, stats, Resolution};
use knotted_core::verdict::{cable_report, connect_sum_report, CrossingReport};
use knotted_core::{Diagram, LaurentPoly};

#[derive(Parser)]
#[command(name = "knotted", about = "Diagrammatic knot invariants and certified crossing-number reports", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct OracleOpts {
    /// Refuse brute-force brackets on diagrams above this many crossings.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub max_bracket_crossings: usize,
    /// Worker threads for state enumeration (0 = rayon default).
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print diagram statistics and the all-A / all-B state graphs.
    Adequacy {
        /// Catalog name, inline PD text, JSON, or @file.
        knot: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the colored Jones polynomial and its extreme degrees.
    Jones {
        knot: String,
        /// Color n >= 1 (n = 2 is the ordinary Jones polynomial).
        #[arg(long, default_value_t = 2)]
        color: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        oracle: OracleOpts,
    },
    /// Construct the (p,q)-cable diagram D_{p,q}.
    Cable {
        knot: String,
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        #[arg(short)]
        q: usize,
        /// Print the PD text of the constructed diagram and nothing else.
        #[arg(long)]
        emit_pd: bool,
    },
    /// Certified crossing-number report for the (p,q)-cable.
    Report {
        knot: String,
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        #[arg(short)]
        q: usize,
        #[arg(long)]
        json: bool,
    },
    /// Report for K1_{p,2} # K2.
    Sum {
        knot1: String,
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        knot2: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the oracle-vs-formula acceptance checks.
    Selftest {
        #[command(flatten)]
        oracle: OracleOpts,
    },
}

/// Resolve a knot argument: a catalog name, `@path` to a file, inline JSON
/// (`{"crossings": ...}`), or inline PD text.
pub fn knot_arg(s: &str) -> Result<Diagram> {
    let text = if let Some(path) = s.strip_prefix('@') {
        fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?
    } else {
        s.to_string()
    };
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let dj: DiagramJson = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("bad diagram JSON: {e}")))?;
        let crossings = dj
            .crossings
            .into_iter()
            .map(|[a, b, c, d]| Crossing::new(a, b, c, d))
            .collect();
        Diagram::from_crossings(crossings)
    } else {
        parse_pd(trimmed)
    }
}

#[derive(Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<[usize; 4]>,
}

impl DiagramJson {
    pub fn of(d: &Diagram) -> Self {
        Self { crossings: d.crossings().iter().map(|x| x.slots).collect() }
    }
}

#[derive(Serialize, Deserialize)]
pub struct StateGraphJson {
    pub circles: usize,
    pub edges: Vec<[usize; 2]>,
    pub one_edged_loop: bool,
}

#[derive(Serialize, Deserialize)]
pub struct AdequacyJson {
    pub c: usize,
    pub c_plus: usize,
    pub c_minus: usize,
    pub writhe: i64,
    pub v_a: usize,
    pub v_b: usize,
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub graph_a: StateGraphJson,
    pub graph_b: StateGraphJson,
}

#[derive(Serialize, Deserialize)]
pub struct JonesJson {
    pub color: usize,
    pub polynomial: String,
    pub d_minus: String,
    pub d_plus: String,
    pub span4: i64,
}

#[derive(Serialize, Deserialize)]
pub struct ReportJson {
    pub knot: String,
    pub p: i64,
    pub q: usize,
    pub case: String,
    pub lower_bound: i64,
    pub exact: Option<i64>,
    pub witness_crossings: usize,
    pub adequacy: String,
    pub admissible: bool,
    pub citations: Vec<String>,
}

impl ReportJson {
    pub fn of(knot: &str, r: &CrossingReport) -> Self {
        Self {
            knot: knot.to_string(),
            p: r.p,
            q: r.q,
            case: r.case.as_str().to_string(),
            lower_bound: r.lower_bound,
            exact: r.exact,
            witness_crossings: r.constructed_diagram_crossings,
            adequacy: r.adequacy_verdict.as_str().to_string(),
            admissible: r.admissible,
            citations: r.citations.iter().map(|c| c.as_str().to_string()).collect(),
        }
    }
}

fn graph_json(d: &Diagram, which: Resolution) -> StateGraphJson {
    let g = state_graph(d, which);
    StateGraphJson {
        circles: g.n_circles,
        edges: g.edges.iter().map(|&(i, j)| [i, j]).collect(),
        one_edged_loop: g.one_edged_loop,
    }
}

/// Kauffman bracket with the 2^c states split across rayon workers. The
/// per-chunk tallies are merged by exact counter addition, so the result is
/// identical for every thread count.
pub fn parallel_bracket(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    let c = d.n_crossings();
    if c > cap {
        return Err(Error::OracleInfeasible { crossings: c, cap });
    }
    let total: u64 = 1 << c;
    let chunk: u64 = 1 << 14;
    let n_chunks = total.div_ceil(chunk);
    let tallies = (0..n_chunks)
        .into_par_iter()
        .map(|i| state_counts(d, i * chunk, ((i + 1) * chunk).min(total)))
        .reduce(
            || StateCounts::new(c),
            |mut a, b| {
                a.merge(&b);
                a
            },
        );
    Ok(bracket_from_counts(&tallies))
}

pub fn parallel_colored_jones(d: &Diagram, n: usize, cap: usize) -> Result<LaurentPoly> {
    colored_jones_with(d, n, cap, &mut |cable| parallel_bracket(cable, cap))
}

/// Run `f` inside a dedicated rayon pool of `threads` workers (0 = the
/// global default pool).
pub fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce()) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serialize"));
    } else {
        human();
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Adequacy { knot, json } => {
            let d = knot_arg(&knot)?;
            let st = stats(&d);
            let out = AdequacyJson {
                c: st.c,
                c_plus: st.c_plus,
                c_minus: st.c_minus,
                writhe: st.wr,
                v_a: st.v_a,
                v_b: st.v_b,
                a_adequate: st.a_adequate,
                b_adequate: st.b_adequate,
                graph_a: graph_json(&d, Resolution::A),
                graph_b: graph_json(&d, Resolution::B),
            };
            emit(json, &out, || {
                println!(
                    "c = {} (c+ = {}, c- = {}), writhe = {}",
                    out.c, out.c_plus, out.c_minus, out.writhe
                );
                println!("v_A = {} (A-adequate: {})", out.v_a, out.a_adequate);
                println!("v_B = {} (B-adequate: {})", out.v_b, out.b_adequate);
                println!(
                    "G_A: {} circles, edges {:?}{}",
                    out.graph_a.circles,
                    out.graph_a.edges,
                    if out.graph_a.one_edged_loop { " (one-edged loop)" } else { "" }
                );
                println!(
                    "G_B: {} circles, edges {:?}{}",
                    out.graph_b.circles,
                    out.graph_b.edges,
                    if out.graph_b.one_edged_loop { " (one-edged loop)" } else { "" }
                );
            });
        }
        Command::Jones { knot, color, json, oracle } => {
            let d = knot_arg(&knot)?;
            let cap = oracle.max_bracket_crossings;
            let poly =
                in_pool(oracle.threads, || parallel_colored_jones(&d, color, cap))?;
            let (lo, hi, span) = poly.degree_span()?;
            let out = JonesJson {
                color,
                polynomial: poly.to_string(),
                d_minus: lo.to_string(),
                d_plus: hi.to_string(),
                span4: span,
            };
            emit(json, &out, || {
                println!("J(n={color}) = {}", out.polynomial);
                println!("d- = {}, d+ = {}, span4 = {span}", out.d_minus, out.d_plus);
            });
        }
        Command::Cable { knot, p, q, emit_pd } => {
            let d = knot_arg(&knot)?;
            let (cable, spec) = cable_diagram(&d, p, q)?;
            if emit_pd {
                println!("{}", cable.to_pd_text());
            } else {
                println!(
                    "D_{{{p},{q}}}: {} crossings (t = {})",
                    cable.n_crossings(),
                    spec.t
                );
                println!("{}", cable.to_pd_text());
            }
        }
        Command::Report { knot, p, q, json } => {
            let d = knot_arg(&knot)?;
            let r = cable_report(&d, p, q)?;
            print_report(&knot, &r, json);
        }
        Command::Sum { knot1, p, knot2, json } => {
            let d1 = knot_arg(&knot1)?;
            let d2 = knot_arg(&knot2)?;
            let r = connect_sum_report(&d1, p, &d2)?;
            let label = format!("{knot1}_{{{p},2}} # {knot2}");
            print_report(&label, &r, json);
        }
        Command::Selftest { oracle } => {
            let cap = oracle.max_bracket_crossings;
            in_pool(oracle.threads, || selftest(cap))?;
        }
    }
    Ok(())
}

fn print_report(knot: &str, r: &CrossingReport, json: bool) {
    let out = ReportJson::of(knot, r);
    emit(json, &out, || {
        println!("{knot} (p = {}, q = {}): {}", out.p, out.q, out.case);
        match out.exact {
            Some(v) => println!("crossing number = {v} (exact)"),
            None => println!("crossing number >= {}", out.lower_bound),
        }
        println!(
            "witness diagram: {} crossings; adequacy: {}; admissible: {}",
            out.witness_crossings, out.adequacy, out.admissible
        );
        println!("citations: {}", out.citations.join(", "));
    });
}

/// Oracle-vs-formula checks mirroring the acceptance suite; errors on the
/// first failure.
pub fn selftest(cap: usize) -> Result<()> {
    let fail = |msg: String| Err(Error::Precondition(msg));

    // Degree laws against the brute-force oracle.
    for name in CATALOG_NAMES {
        let d = catalog(name)?;
        for n in 1..=3usize {
            let cable_crossings = d.n_crossings() * (n - 1) * (n - 1);
            if cable_crossings > cap {
                continue;
            }
            let st = stats(&d);
            let (f_minus, f_plus) =
                knotted_core::degrees::adequate_degrees(&st, n as i64)?;
            let (lo, hi, _) = parallel_colored_jones(&d, n, cap)?.degree_span()?;
            if (lo.0, hi.0) != (f_minus, f_plus) {
                return fail(format!(
                    "degree law mismatch for {name} at n = {n}: oracle ({}, {}) vs formula ({f_minus}, {f_plus})",
                    lo.0, hi.0
                ));
            }
        }
        println!("degree law ok: {name} (n <= 3)");
    }

    // Certified values from the theorems.
    for (name, p, expected) in
        [("4_1", 1, 17), ("4_1", -1, 17), ("3_1", -7, 13), ("3_1", -5, 13)]
    {
        let r = cable_report(&catalog(name)?, p, 2)?;
        if r.exact != Some(expected) {
            return fail(format!("{name} (p={p}, q=2): exact {:?} != {expected}", r.exact));
        }
        println!("cable report ok: {name} p={p} -> {expected}");
    }
    for (name, expected) in [("3_1", 25), ("4_1", 33)] {
        let r = knotted_core::verdict::mirror_composite_report(&catalog(name)?, 1)?;
        if r.exact != Some(expected) {
            return fail(format!("{name} # mirror: exact {:?} != {expected}", r.exact));
        }
        println!("mirror composite ok: {name} -> {expected}");
    }
    let r = connect_sum_report(&catalog("4_1")?, 1, &catalog("3_1")?)?;
    if r.exact != Some(20) {
        return fail(format!("4_1 # 3_1 sum: exact {:?} != 20", r.exact));
    }
    println!("connect sum ok: 4_1_{{1,2}} # 3_1 -> 20");

    // Thread-count independence of the parallel bracket.
    let d = catalog("6_2")?;
    let serial = knotted_core::jones::kauffman_bracket_capped(&d, cap)?.poly;
    let par = parallel_bracket(&d, cap)?;
    if serial != par {
        return fail("parallel bracket differs from serial".to_string());
    }
    println!("parallel bracket ok: 6_2");

    println!("selftest passed");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knot_arg_forms() {
        let named = knot_arg("3_1").unwrap();
        let pd = knot_arg("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(named, pd);
        let js = knot_arg(r#"{"crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]}"#).unwrap();
        assert_eq!(named, js);
    }

    #[test]
    fn knot_arg_bad_json() {
        assert!(matches!(knot_arg("{oops"), Err(Error::Parse(_))));
    }

    #[test]
    fn diagram_json_roundtrip() {
        let d = catalog("5_2").unwrap();
        let text = serde_json::to_string(&DiagramJson::of(&d)).unwrap();
        assert_eq!(knot_arg(&text).unwrap(), d);
    }

    #[test]
    fn parallel_matches_serial() {
        for name in ["3_1", "4_1", "6_3"] {
            let d = catalog(name).unwrap();
            let serial = knotted_core::jones::kauffman_bracket(&d).unwrap().poly;
            assert_eq!(parallel_bracket(&d, DEFAULT_CAP).unwrap(), serial, "{name}");
        }
    }

    #[test]
    fn thread_counts_agree() {
        let d = catalog("4_1").unwrap();
        let reference = parallel_bracket(&d, DEFAULT_CAP).unwrap();
        for threads in [1, 2, 3, 7] {
            let got = in_pool(threads, || parallel_bracket(&d, DEFAULT_CAP)).unwrap();
            assert_eq!(got, reference, "threads = {threads}");
        }
    }

    #[test]
    fn report_json_schema() {
        let r = cable_report(&catalog("4_1").unwrap(), 1, 2).unwrap();
        let text = serde_json::to_string(&ReportJson::of("4_1", &r)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["exact"], 17);
        assert_eq!(v["adequacy"], "non_adequate");
        assert_eq!(v["case"], "CASE1");
        assert_eq!(v["citations"][0], "Cor1.2");
    }
}
