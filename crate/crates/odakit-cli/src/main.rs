//! Command-line interface for the lattice-polytope toolkit: ingest
//! polytope files, run the library's checks, and emit deterministic
//! text or JSON reports.
//!
//! Exit codes: 0 when the command succeeds and the checked property
//! holds, 1 when the property fails (for example, not an IDP pair),
//! 2 on usage or data errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use odakit::classify::{classify, ClassificationReport};
use odakit::construct::{catalog, counterexample, sep, sep_dual, wedge, Graph};
use odakit::error::Error;
use odakit::exact::Int;
use odakit::idp::{
    idp_pair_check, minkowski_sum, oracle_decompose, round_decompose, DecompositionMethod,
    IdpPairReport,
};
use odakit::io::{
    emit_polytope, emit_report, int_value, parse_matrix, parse_polydb_record, parse_polytope,
    Report, ReportFormat,
};
use odakit::lattice::{is_idp, lattice_points};
use odakit::triangulate::{
    boundary_triangulation, centric_triangulation, is_unimodular_triangulation,
    placing_triangulation, verify_triangulation, Triangulation,
};
use odakit::unimodular::{is_facet_unimodular, is_totally_unimodular, MinorWitness};
use odakit::Polytope;

#[derive(Parser)]
#[command(
    name = "odakit",
    version,
    about = "Exact checks and constructions for IDP pairs of lattice polytopes"
)]
struct Cli {
    /// Emit the full report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Fetch a polytope database record by id over HTTP, validate it,
    /// and print the raw JSON (endpoint override: ODAKIT_POLYDB_URL).
    #[arg(long, value_name = "ID")]
    fetch_polydb: Option<String>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a polytope (reflexive, simplicial, smooth, smooth Fano,
    /// facet lattice bound) and test facet unimodularity.
    Analyze {
        /// Polytope file or catalog name.
        file: String,
    },
    /// Check whether two polytopes form an IDP pair; optionally
    /// decompose every lattice point of the sum.
    IdpPair {
        /// First polytope file or catalog name.
        file_p: String,
        /// Second polytope file or catalog name.
        file_q: String,
        /// Decompose each point of the sum with this method.
        #[arg(long, value_enum)]
        decompose: Option<DecomposeWith>,
    },
    /// Check the IDP property of one polytope for dilations up to a
    /// bound.
    Idp {
        /// Polytope file or catalog name.
        file: String,
        /// Largest dilation factor to check.
        #[arg(long)]
        kmax: i64,
    },
    /// Test a matrix for total unimodularity.
    Tu {
        /// JSON matrix file: an array of integer rows, or {"rows": […]}.
        file: String,
    },
    /// Build the symmetric edge polytope of a graph given as an edge
    /// list like 1-2,2-3,3-1; prints the polytope as JSON.
    Sep {
        /// Comma-separated edges i-j on vertices 1..=n.
        edges: String,
        /// Dualize the result.
        #[arg(long)]
        dual: bool,
    },
    /// Wedge a polytope over one of its facets; prints the polytope as
    /// JSON.
    Wedge {
        /// Polytope file or catalog name.
        file: String,
        /// Facet index (0-based, in stored facet order).
        #[arg(long)]
        facet: usize,
    },
    /// Triangulate a polytope: placing triangulation of its lattice
    /// points, or the centric triangulation with --centric.
    Triangulate {
        /// Polytope file or catalog name.
        file: String,
        /// Cone the boundary triangulation over the origin (requires
        /// the origin strictly inside).
        #[arg(long)]
        centric: bool,
    },
    /// Run a named non-IDP pair end-to-end (oda2d or polydb4d).
    Counterexample {
        /// Pair name.
        name: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DecomposeWith {
    /// Lexicographic scan for any valid decomposition.
    Oracle,
    /// Coordinate rounding of a rational decomposition.
    Rounding,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let format = if cli.json {
        ReportFormat::Json
    } else {
        ReportFormat::Text
    };
    if let Some(id) = &cli.fetch_polydb {
        if cli.command.is_some() {
            bail!("--fetch-polydb does not combine with a command");
        }
        let body = fetch_polydb(id)?;
        print!("{body}");
        if !body.ends_with('\n') {
            println!();
        }
        return Ok(true);
    }
    let Some(command) = &cli.command else {
        bail!("a command is required; see --help");
    };
    match command {
        Command::Analyze { file } => cmd_analyze(file, format),
        Command::IdpPair {
            file_p,
            file_q,
            decompose,
        } => cmd_idp_pair(file_p, file_q, *decompose, format),
        Command::Idp { file, kmax } => cmd_idp(file, *kmax, format),
        Command::Tu { file } => cmd_tu(file, format),
        Command::Sep { edges, dual } => cmd_sep(edges, *dual),
        Command::Wedge { file, facet } => cmd_wedge(file, *facet),
        Command::Triangulate { file, centric } => cmd_triangulate(file, *centric, format),
        Command::Counterexample { name } => cmd_counterexample(name, format),
    }
}

/// Loads a polytope from a JSON file (either schema, sniffed by keys),
/// or from the catalog when the argument is not a path to a file.
fn load_polytope(spec: &str) -> anyhow::Result<Polytope> {
    if Path::new(spec).is_file() {
        let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        let root: Value = serde_json::from_str(&text).with_context(|| format!("parsing {spec}"))?;
        let parsed = if root.get("FACETS").is_some() || root.get("VERTICES").is_some() {
            parse_polydb_record(&text)
        } else {
            parse_polytope(&text)
        };
        Ok(parsed.with_context(|| format!("in {spec}"))?)
    } else {
        Ok(
            catalog(spec)
                .with_context(|| format!("{spec} is neither a file nor a catalog name"))?,
        )
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct AnalyzeReport {
    classification: ClassificationReport,
    facet_unimodular: bool,
}

impl Report for AnalyzeReport {
    fn to_json(&self) -> Value {
        let mut v = self.classification.to_json();
        v["facet_unimodular"] = json!(self.facet_unimodular);
        v
    }

    fn to_text(&self) -> String {
        format!(
            "{}facet unimodular: {}\n",
            self.classification.to_text(),
            yn(self.facet_unimodular)
        )
    }
}

fn cmd_analyze(file: &str, format: ReportFormat) -> anyhow::Result<bool> {
    let p = load_polytope(file)?;
    let report = AnalyzeReport {
        classification: classify(&p),
        facet_unimodular: is_facet_unimodular(&p),
    };
    print!("{}", emit_report(&report, format));
    Ok(true)
}

struct PairDecompositionReport {
    pair: IdpPairReport,
    method_counts: BTreeMap<&'static str, usize>,
    failure: Option<(Vec<Int>, String)>,
}

impl Report for PairDecompositionReport {
    fn to_json(&self) -> Value {
        let failure = self.failure.as_ref().map(|(x, why)| {
            json!({
                "point": Value::Array(x.iter().map(int_value).collect()),
                "reason": why,
            })
        });
        let counts: BTreeMap<String, usize> = self
            .method_counts
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        json!({
            "pair": self.pair.to_json(),
            "decomposed_counts": counts,
            "decomposition_failure": failure,
        })
    }

    fn to_text(&self) -> String {
        let mut out = self.pair.to_text();
        for (method, count) in &self.method_counts {
            out.push_str(&format!("decomposed by {method}: {count}\n"));
        }
        if let Some((x, why)) = &self.failure {
            let coords: Vec<String> = x.iter().map(Int::to_string).collect();
            out.push_str(&format!(
                "decomposition failed at ({}): {why}\n",
                coords.join(", ")
            ));
        }
        out
    }
}

fn method_name(m: DecompositionMethod) -> &'static str {
    match m {
        DecompositionMethod::Oracle => "oracle",
        DecompositionMethod::Rounding => "rounding",
        DecompositionMethod::Fallback => "fallback",
    }
}

fn cmd_idp_pair(
    file_p: &str,
    file_q: &str,
    decompose: Option<DecomposeWith>,
    format: ReportFormat,
) -> anyhow::Result<bool> {
    let p = load_polytope(file_p)?;
    let q = load_polytope(file_q)?;
    let pair = idp_pair_check(&p, &q)?;
    let mut holds = pair.is_idp_pair();

    let Some(with) = decompose else {
        print!("{}", emit_report(&pair, format));
        return Ok(holds);
    };

    let sum = minkowski_sum(&p, &q)?;
    let mut method_counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut failure = None;
    for x in &lattice_points(&sum).points {
        let result = match with {
            DecomposeWith::Oracle => oracle_decompose(&p, &q, x),
            DecomposeWith::Rounding => round_decompose(&p, &q, x),
        };
        match result {
            Ok(d) => *method_counts.entry(method_name(d.method)).or_insert(0) += 1,
            Err(e) if matches!(e, Error::GapPoint | Error::HypothesesUnsatisfied(_)) => {
                failure = Some((x.clone(), e.to_string()));
                holds = false;
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let report = PairDecompositionReport {
        pair,
        method_counts,
        failure,
    };
    print!("{}", emit_report(&report, format));
    Ok(holds)
}

fn cmd_idp(file: &str, kmax: i64, format: ReportFormat) -> anyhow::Result<bool> {
    let p = load_polytope(file)?;
    let report = is_idp(&p, kmax)?;
    print!("{}", emit_report(&report, format));
    Ok(report.holds)
}

struct TuReport {
    totally_unimodular: bool,
    witness: Option<MinorWitness>,
}

impl Report for TuReport {
    fn to_json(&self) -> Value {
        let witness = self
            .witness
            .as_ref()
            .map(|w| json!({ "rows": w.rows, "cols": w.cols, "det": int_value(&w.det) }));
        json!({ "totally_unimodular": self.totally_unimodular, "witness": witness })
    }

    fn to_text(&self) -> String {
        let mut out = format!("totally unimodular: {}\n", yn(self.totally_unimodular));
        if let Some(w) = &self.witness {
            out.push_str(&format!(
                "violating minor: rows {:?}, cols {:?}, det {}\n",
                w.rows, w.cols, w.det
            ));
        }
        out
    }
}

fn cmd_tu(file: &str, format: ReportFormat) -> anyhow::Result<bool> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {file}"))?;
    let m = parse_matrix(&text).with_context(|| format!("in {file}"))?;
    let (totally_unimodular, witness) = is_totally_unimodular(&m);
    let report = TuReport {
        totally_unimodular,
        witness,
    };
    print!("{}", emit_report(&report, format));
    Ok(totally_unimodular)
}

fn parse_edges(text: &str) -> anyhow::Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for part in text.split(',') {
        let (a, b) = part
            .split_once('-')
            .with_context(|| format!("edge {part:?}: expected the form i-j"))?;
        let i: usize = a
            .trim()
            .parse()
            .with_context(|| format!("edge {part:?}: bad endpoint {a:?}"))?;
        let j: usize = b
            .trim()
            .parse()
            .with_context(|| format!("edge {part:?}: bad endpoint {b:?}"))?;
        n = n.max(i).max(j);
        edges.push((i, j));
    }
    Ok(Graph::new(n, &edges)?)
}

fn cmd_sep(edges: &str, dual: bool) -> anyhow::Result<bool> {
    let g = parse_edges(edges)?;
    let (name, p) = if dual {
        ("sep_dual", sep_dual(&g)?)
    } else {
        ("sep", sep(&g)?)
    };
    print!("{}", emit_polytope(&format!("{name}({edges})"), &p));
    Ok(true)
}

fn cmd_wedge(file: &str, facet: usize) -> anyhow::Result<bool> {
    let p = load_polytope(file)?;
    let w = wedge(&p, facet)?;
    print!("{}", emit_polytope(&format!("wedge_facet{facet}"), &w));
    Ok(true)
}

struct TriangulationReport {
    triangulation: Triangulation,
    verified: bool,
    unimodular: bool,
}

impl Report for TriangulationReport {
    fn to_json(&self) -> Value {
        let mut v = self.triangulation.to_json();
        v["verified"] = json!(self.verified);
        v["unimodular"] = json!(self.unimodular);
        v
    }

    fn to_text(&self) -> String {
        format!(
            "{}volume identity verified: {}\nunimodular: {}\n",
            self.triangulation.to_text(),
            yn(self.verified),
            yn(self.unimodular)
        )
    }
}

fn cmd_triangulate(file: &str, centric: bool, format: ReportFormat) -> anyhow::Result<bool> {
    let p = load_polytope(file)?;
    let triangulation = if centric {
        let boundary = boundary_triangulation(&p)?;
        centric_triangulation(&p, &boundary)?
    } else {
        placing_triangulation(&lattice_points(&p).points)?
    };
    let verified = verify_triangulation(&p, &triangulation);
    let unimodular = is_unimodular_triangulation(&triangulation);
    let report = TriangulationReport {
        triangulation,
        verified,
        unimodular,
    };
    print!("{}", emit_report(&report, format));
    Ok(verified)
}

fn cmd_counterexample(name: &str, format: ReportFormat) -> anyhow::Result<bool> {
    let (p, q) = counterexample(name)?;
    let report = idp_pair_check(&p, &q)?;
    print!("{}", emit_report(&report, format));
    Ok(report.is_idp_pair())
}

fn fetch_polydb(id: &str) -> anyhow::Result<String> {
    let base = std::env::var("ODAKIT_POLYDB_URL")
        .unwrap_or_else(|_| "https://polydb.org/rest/current/record".to_string());
    let url = format!("{}/{}", base.trim_end_matches('/'), id);
    let body = reqwest::blocking::Client::builder()
        .timeout(Duration::from_secs(30))
        .build()?
        .get(&url)
        .send()
        .with_context(|| format!("fetching {url}"))?
        .error_for_status()?
        .text()?;
    parse_polydb_record(&body).context("fetched record failed validation")?;
    Ok(body)
}
