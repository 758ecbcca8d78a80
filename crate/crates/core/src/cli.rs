//! Command-line front end: `compute`, `verify` and `bench`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 arithmetic overflow.

use std::collections::hash_map::DefaultHasher;
use std::ffi::OsString;
use std::hash::{Hash, Hasher};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::chain::{build_graph, enumerate_chains_capped, BenzenoidGraph, ChainSpec};
use crate::indices::{self, IndexReport};
use crate::oracle;
use crate::poly::Polynomial;
use crate::polyacene;
use crate::recurrence::chain_edge_hosoya;
use crate::report::{format_millis, Report};
use crate::{Error, Method};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

/// Environment variable overriding the largest `--max-h` accepted by `verify`.
pub const VERIFY_CAP_ENV: &str = "EDGE_HOSOYA_VERIFY_CAP";

#[derive(Debug, Parser)]
#[command(name = "edge-hosoya", version, about = "Edge-Hosoya polynomials of benzenoid chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Recurrence,
    ClosedForm,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::ClosedForm => Method::ClosedForm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Width {
    #[value(name = "64")]
    W64,
    #[value(name = "128")]
    W128,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the edge-Hosoya polynomial and indices of one chain.
    Compute {
        /// Chain as `h[:turns]`, turns over L, S, R (e.g. `4:SS`).
        spec: String,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the chain graph as an edge list (`u v` per line).
        #[arg(long)]
        emit_graph: Option<PathBuf>,
        /// Bit width used to accumulate the indices.
        #[arg(long, value_enum, default_value = "128")]
        index_width: Width,
    },
    /// Cross-check every chain up to a size against the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_h: usize,
        /// Largest accepted `--max-h`.
        #[arg(long, env = VERIFY_CAP_ENV, default_value_t = 10)]
        cap: usize,
        /// Perturb recurrence results for chains with two or more hexagons.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Time the three methods on linear chains.
    Bench {
        #[arg(required = true)]
        h: Vec<usize>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Skip the oracle above this many hexagons.
        #[arg(long, default_value_t = 60)]
        oracle_cap: usize,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match cli.command {
        Command::Compute { spec, method, format, emit_graph, index_width } => {
            compute(&spec, method.into(), format, emit_graph, index_width, out, err)
        }
        Command::Verify { max_h, cap, inject_fault } => verify(max_h, cap, inject_fault, out, err),
        Command::Bench { h, method, oracle_cap } => bench(&h, method.map(Method::from), oracle_cap, out, err),
    }
}

pub fn main() -> ! {
    let code = run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code)
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        _ if e.is_overflow() => EXIT_OVERFLOW,
        Error::Chain(_) | Error::NotLinear(_) => EXIT_USAGE,
        _ => EXIT_MISMATCH,
    }
}

fn overlap_warning(graph: &BenzenoidGraph) -> Option<String> {
    let first = graph.overlaps().first()?;
    Some(format!(
        "planar embedding self-overlaps: {} vertex coincidence(s), first at hexagon {} (vertex {} on vertex {}); the graph itself is unaffected",
        graph.overlaps().len(),
        first.hexagon,
        first.vertex,
        first.existing
    ))
}

fn compute(
    spec_text: &str,
    method: Method,
    format: Format,
    emit_graph: Option<PathBuf>,
    width: Width,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let spec: ChainSpec = match spec_text.parse() {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let graph = build_graph(&spec);
    if let Some(path) = emit_graph {
        if let Err(e) = std::fs::write(&path, graph.graph().to_edge_list()) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let started = Instant::now();
    let result = (|| -> Result<IndexReport, Error> {
        let poly = match method {
            Method::Oracle => oracle::edge_hosoya_bruteforce(graph.graph())?,
            _ => crate::edge_hosoya(&spec, method)?,
        };
        Ok(match width {
            Width::W64 => IndexReport::from_polynomial_in::<u64>(poly)?,
            Width::W128 => IndexReport::from_polynomial_in::<u128>(poly)?,
        })
    })();
    let elapsed = started.elapsed();
    let indices = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };
    let warnings = overlap_warning(&graph).into_iter().collect();
    let report = Report::new(&spec.to_string(), method.as_str(), &indices, warnings, elapsed);
    let _ = match format {
        Format::Text => write!(out, "{}", report.to_text()),
        Format::Json => writeln!(out, "{}", report.to_json()),
    };
    EXIT_OK
}

/// Checks one chain; returns the list of failed checks.
fn check_chain(spec: &ChainSpec, inject_fault: bool) -> Result<Vec<String>, Error> {
    let mut failures = Vec::new();
    let graph = build_graph(spec);
    let g = graph.graph();
    let m = g.edge_count() as u64;

    let brute = oracle::edge_hosoya_bruteforce(g)?;
    let mut rec = chain_edge_hosoya(spec)?;
    if inject_fault && spec.hexagons() >= 2 {
        rec = rec.add(&Polynomial::monomial(1, 1))?;
    }
    if rec != brute {
        failures.push(format!("recurrence {rec} != oracle {brute}"));
    }
    if brute.eval_at_one()? != m * (m + 1) / 2 {
        failures.push(format!("coefficient sum of {brute} is not {}", m * (m + 1) / 2));
    }
    let hat = oracle::hat_edge_hosoya_bruteforce(g)?;
    match indices::to_hat(&brute, m) {
        Ok(converted) if converted == hat => {}
        Ok(converted) => failures.push(format!("converted hat polynomial {converted} != oracle {hat}")),
        Err(e) => failures.push(format!("hat conversion failed: {e}")),
    }
    if indices::from_hat(&hat, m)? != brute {
        failures.push("hat round trip does not restore the polynomial".into());
    }
    if spec.is_linear() {
        let closed = polyacene::edge_hosoya_closed(spec.hexagons())?;
        if closed != rec {
            failures.push(format!("closed form {closed} != recurrence {rec}"));
        }
    }
    Ok(failures)
}

fn verify(max_h: usize, cap: usize, inject_fault: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if max_h == 0 {
        let _ = writeln!(err, "error: --max-h must be at least 1");
        return EXIT_USAGE;
    }
    let mut specs = Vec::new();
    for h in 1..=max_h {
        match enumerate_chains_capped(h, cap) {
            Ok(s) => specs.extend(s),
            Err(e) => {
                let _ = writeln!(err, "error: {e} (raise it with {VERIFY_CAP_ENV})");
                return EXIT_USAGE;
            }
        }
    }
    let results: Vec<(ChainSpec, Result<Vec<String>, Error>)> = specs
        .into_par_iter()
        .map(|s| {
            let r = check_chain(&s, inject_fault);
            (s, r)
        })
        .collect();

    let mut failed = 0usize;
    let mut overflow = false;
    for (spec, result) in &results {
        match result {
            Ok(f) if f.is_empty() => {}
            Ok(f) => {
                failed += 1;
                for reason in f {
                    let _ = writeln!(out, "FAIL {spec}  {reason}");
                }
            }
            Err(e) => {
                failed += 1;
                overflow |= e.is_overflow();
                let _ = writeln!(out, "FAIL {spec}  {e}");
            }
        }
    }
    let _ = writeln!(
        out,
        "checked {} chains (h <= {max_h}): {} passed, {failed} failed",
        results.len(),
        results.len() - failed
    );
    match (failed, overflow) {
        (0, _) => EXIT_OK,
        (_, true) => EXIT_OVERFLOW,
        _ => EXIT_MISMATCH,
    }
}

fn digest(p: &Polynomial) -> String {
    let mut hasher = DefaultHasher::new();
    p.coeffs().hash(&mut hasher);
    format!("{:016x}", hasher.finish())
}

fn bench(hs: &[usize], only: Option<Method>, oracle_cap: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let methods: Vec<Method> = match only {
        Some(m) => vec![m],
        None => Method::ALL.to_vec(),
    };
    let _ = writeln!(out, "{:>8}  {:<12} {:>12}  {:>8}  hash", "h", "method", "ms", "degree");
    let mut code = EXIT_OK;
    for &h in hs {
        let spec = match ChainSpec::polyacene(h) {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        };
        let mut digests = Vec::new();
        for &method in &methods {
            if method == Method::Oracle && h > oracle_cap {
                let _ = writeln!(out, "{h:>8}  {:<12} {:>12}", method.as_str(), "skipped");
                continue;
            }
            let started = Instant::now();
            let result = crate::edge_hosoya(&spec, method);
            let elapsed = started.elapsed();
            match result {
                Ok(p) => {
                    let d = digest(&p);
                    let degree = p.degree().unwrap_or(0);
                    let _ = writeln!(
                        out,
                        "{h:>8}  {:<12} {:>12}  {degree:>8}  {d}",
                        method.as_str(),
                        format_millis(elapsed)
                    );
                    digests.push(d);
                }
                Err(e) => {
                    let _ = writeln!(err, "error: h={h} {method}: {e}");
                    code = code.max(exit_code_for(&e));
                }
            }
        }
        if digests.len() > 1 {
            let agree = digests.windows(2).all(|w| w[0] == w[1]);
            let _ = writeln!(out, "{h:>8}  agree: {}", if agree { "yes" } else { "NO" });
            if !agree {
                code = code.max(EXIT_MISMATCH);
            }
        }
    }
    code
}
