//! Command-line front end: graph export, invariants, structure checks,
//! atlas sweeps, and backend cross-validation for finite commutative rings.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use agraph_core::graph::export::{ag_dot, ag_json, gamma_dot, gamma_json, invariants_json};
use agraph_core::graph::{build_ag_graph, build_zero_divisor_graph};
use agraph_core::harness::corpus::{
    atlas_rows, corpus_rings, crosscheck_zn, run_checks, Family,
};
use agraph_core::harness::report::{
    atlas_csv, atlas_json, checks_json, checks_text, crosscheck_json, crosscheck_text, tally,
};
use agraph_core::harness::{CheckId, ALL_CHECKS};
use agraph_core::ideal::enumerate_ideals;
use agraph_core::ring::{build_ring_with, parse_ring_spec, BackendChoice, FiniteRing, Limits};
use agraph_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "agraph",
    version,
    about = "Annihilating-ideal and zero-divisor graphs of finite commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Export a ring's graph as JSON or DOT
    Graph {
        /// Ring spec, e.g. "Z12", "Z2 x Z4", "Z2[x]/(x^2 + x + 1)"
        spec: String,
        /// Output format (json or dot)
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Use the zero-divisor graph instead of the annihilating-ideal graph
        #[arg(long)]
        gamma: bool,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
        backend: BackendArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Print a graph's numeric invariants as JSON
    Invariants {
        /// Ring spec, e.g. "Z12", "Z2 x Z4", "Z2[x]/(x^2 + x + 1)"
        spec: String,
        /// Output format (json)
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Use the zero-divisor graph instead of the annihilating-ideal graph
        #[arg(long)]
        gamma: bool,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
        backend: BackendArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Run structure checks against one ring
    Verify {
        /// Ring spec, e.g. "Z12", "Z2 x Z4", "Z2[x]/(x^2 + x + 1)"
        spec: String,
        /// "all" or a comma-separated list of check names
        #[arg(long, default_value = "all")]
        checks: String,
        /// Output format (json or text)
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
        backend: BackendArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Tabulate graph invariants over a family of rings
    Atlas {
        /// Smallest modulus of the Zn sweep (needs --max)
        #[arg(long)]
        min: Option<u64>,
        /// Sweep Zn for n up to this bound
        #[arg(long)]
        max: Option<u64>,
        /// Sweep products of prime-power cyclic rings up to this order
        #[arg(long)]
        products: Option<u64>,
        /// File of ring specs, one per line ('#' starts a comment)
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Output format (csv or json)
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
        backend: BackendArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Compare the divisor and table backends on Zn for every n up to a bound
    Crosscheck {
        /// Largest modulus to compare
        max: u64,
        /// Output format (text or json)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    /// Divisor arithmetic for plain Zn, tables otherwise
    Auto,
    /// Materialized operation tables
    Table,
    /// Divisor arithmetic only (plain Zn specs)
    Divisor,
}

impl From<BackendArg> for BackendChoice {
    fn from(b: BackendArg) -> BackendChoice {
        match b {
            BackendArg::Auto => BackendChoice::Auto,
            BackendArg::Table => BackendChoice::Table,
            BackendArg::Divisor => BackendChoice::ZnFast,
        }
    }
}

#[derive(Args, Clone, Copy)]
struct LimitArgs {
    /// Largest ring order for which element tables and element lists are materialized
    #[arg(long)]
    order_cap: Option<usize>,
    /// Largest ideal count the lattice enumeration may produce
    #[arg(long)]
    ideal_cap: Option<usize>,
}

impl LimitArgs {
    fn resolve(self) -> Limits {
        let mut limits = Limits::default();
        if let Some(cap) = self.order_cap {
            limits.order_cap = cap;
        }
        if let Some(cap) = self.ideal_cap {
            limits.ideal_cap = cap;
        }
        limits
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", diagnostic(&e));
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn diagnostic(e: &Error) -> String {
    let tag = match e {
        Error::Parse { .. } | Error::Semantic { .. } => "parse",
        Error::Unsupported(_) | Error::BadIdeal(_) => "input",
        Error::CapExceeded { .. } => "cap",
        Error::Io(_) => "io",
        Error::AxiomCheck(_) | Error::Serialize(_) => "internal",
    };
    format!("error[{tag}]: {e}")
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Graph {
            spec,
            format,
            gamma,
            out,
            backend,
            limits,
        } => cmd_graph(&spec, format, gamma, out, backend.into(), limits.resolve()),
        Cmd::Invariants {
            spec,
            format,
            gamma,
            out,
            backend,
            limits,
        } => cmd_invariants(&spec, format, gamma, out, backend.into(), limits.resolve()),
        Cmd::Verify {
            spec,
            checks,
            format,
            out,
            backend,
            limits,
        } => cmd_verify(&spec, &checks, format, out, backend.into(), limits.resolve()),
        Cmd::Atlas {
            min,
            max,
            products,
            corpus,
            format,
            out,
            backend,
            limits,
        } => cmd_atlas(
            min,
            max,
            products,
            corpus,
            format,
            out,
            backend.into(),
            limits.resolve(),
        ),
        Cmd::Crosscheck {
            max,
            format,
            out,
            limits,
        } => cmd_crosscheck(max, format, out, limits.resolve()),
    }
}

fn build(spec_text: &str, backend: BackendChoice, limits: Limits) -> Result<Arc<FiniteRing>> {
    let spec = parse_ring_spec(spec_text)?;
    Ok(Arc::new(build_ring_with(&spec, backend, limits)?))
}

/// Rejects rings too large to walk element by element. Lattice-level
/// work on the divisor backend stays exempt from this cap.
fn check_element_cap(ring: &FiniteRing, limits: Limits) -> Result<()> {
    if ring.order() > limits.order_cap {
        return Err(Error::CapExceeded {
            what: "ring order for element enumeration",
            needed: ring.order(),
            cap: limits.order_cap,
        });
    }
    Ok(())
}

fn write_output(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn unsupported_format(cmd: &str, allowed: &str) -> Error {
    Error::Unsupported(format!("{cmd} supports {allowed}"))
}

fn cmd_graph(
    spec: &str,
    format: Format,
    gamma: bool,
    out: Option<PathBuf>,
    backend: BackendChoice,
    limits: Limits,
) -> Result<u8> {
    let ring = build(spec, backend, limits)?;
    let text = if gamma {
        check_element_cap(&ring, limits)?;
        let g = build_zero_divisor_graph(&ring);
        match format {
            Format::Dot => gamma_dot(&ring, &g),
            Format::Json => {
                let lat = enumerate_ideals(&ring, limits)?;
                gamma_json(&lat, &g)?
            }
            _ => return Err(unsupported_format("graph", "json and dot")),
        }
    } else {
        let lat = enumerate_ideals(&ring, limits)?;
        let ag = build_ag_graph(&lat);
        match format {
            Format::Dot => ag_dot(&lat, &ag),
            Format::Json => {
                // Vertex element lists are materialized here, so the
                // element cap applies even on the divisor backend.
                check_element_cap(&ring, limits)?;
                ag_json(&lat, &ag)?
            }
            _ => return Err(unsupported_format("graph", "json and dot")),
        }
    };
    write_output(&text, out.as_ref())?;
    Ok(0)
}

fn cmd_invariants(
    spec: &str,
    format: Format,
    gamma: bool,
    out: Option<PathBuf>,
    backend: BackendChoice,
    limits: Limits,
) -> Result<u8> {
    if format != Format::Json {
        return Err(unsupported_format("invariants", "json"));
    }
    let ring = build(spec, backend, limits)?;
    let inv = if gamma {
        check_element_cap(&ring, limits)?;
        build_zero_divisor_graph(&ring).graph.invariants()
    } else {
        let lat = enumerate_ideals(&ring, limits)?;
        build_ag_graph(&lat).graph.invariants()
    };
    write_output(&invariants_json(&inv)?, out.as_ref())?;
    Ok(0)
}

fn parse_check_list(arg: &str) -> Result<Vec<CheckId>> {
    if arg.trim() == "all" {
        return Ok(ALL_CHECKS.to_vec());
    }
    let mut ids = Vec::new();
    for name in arg.split(',') {
        let name = name.trim();
        match CheckId::parse(name) {
            Some(id) => ids.push(id),
            None => {
                return Err(Error::Unsupported(format!(
                    "unknown check '{name}' (try --checks all)"
                )))
            }
        }
    }
    Ok(ids)
}

fn cmd_verify(
    spec: &str,
    checks: &str,
    format: Format,
    out: Option<PathBuf>,
    backend: BackendChoice,
    limits: Limits,
) -> Result<u8> {
    let ids = parse_check_list(checks)?;
    let ring = build(spec, backend, limits)?;
    let results = run_checks(&[ring], &ids, limits)?;
    let text = match format {
        Format::Json => checks_json(&results)?,
        Format::Text => checks_text(&results),
        _ => return Err(unsupported_format("verify", "json and text")),
    };
    write_output(&text, out.as_ref())?;
    let (_, failed, _) = tally(&results);
    Ok(if failed > 0 { 1 } else { 0 })
}

fn read_corpus_file(path: &PathBuf) -> Result<Vec<agraph_core::ring::RingSpec>> {
    let body = std::fs::read_to_string(path)?;
    let mut specs = Vec::new();
    for line in body.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        specs.push(parse_ring_spec(line)?);
    }
    Ok(specs)
}

#[allow(clippy::too_many_arguments)]
fn cmd_atlas(
    min: Option<u64>,
    max: Option<u64>,
    products: Option<u64>,
    corpus: Option<PathBuf>,
    format: Format,
    out: Option<PathBuf>,
    backend: BackendChoice,
    limits: Limits,
) -> Result<u8> {
    let picked = [max.is_some(), products.is_some(), corpus.is_some()]
        .iter()
        .filter(|&&p| p)
        .count();
    if picked != 1 {
        return Err(Error::Unsupported(
            "atlas needs exactly one family: --max N, --products N, or --corpus FILE".into(),
        ));
    }
    if min.is_some() && max.is_none() {
        return Err(Error::Unsupported("--min only applies to the Zn sweep (--max)".into()));
    }
    let family = if let Some(max) = max {
        Family::ZnRange {
            min: min.unwrap_or(2),
            max,
            backend,
        }
    } else if let Some(max_order) = products {
        Family::PrimePowerProducts { max_order }
    } else {
        Family::ExplicitList(read_corpus_file(corpus.as_ref().expect("picked == 1"))?)
    };
    let rings = corpus_rings(&family, limits)?;
    let rows = atlas_rows(&rings, limits)?;
    let text = match format {
        Format::Csv => atlas_csv(&rows)?,
        Format::Json => atlas_json(&rows)?,
        _ => return Err(unsupported_format("atlas", "csv and json")),
    };
    write_output(&text, out.as_ref())?;
    Ok(0)
}

fn cmd_crosscheck(max: u64, format: Format, out: Option<PathBuf>, limits: Limits) -> Result<u8> {
    let report = crosscheck_zn(max, limits)?;
    let text = match format {
        Format::Text => crosscheck_text(&report),
        Format::Json => crosscheck_json(&report)?,
        _ => return Err(unsupported_format("crosscheck", "text and json")),
    };
    write_output(&text, out.as_ref())?;
    Ok(if report.agree == report.total { 0 } else { 1 })
}
