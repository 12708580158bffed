//! Command-line front end. Exit codes: 0 success or all checks pass, 1 a
//! verification check failed, 2 usage or input error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::enumerate::{CactusEnumerator, EnumerationQuery, ENUMERATION_CAP};
use crate::error::Error;
use crate::extremal::{bound_phi, bound_q, build_h, build_hstar};
use crate::graph::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list, Graph};
use crate::invariants::sombor_index;
use crate::numfmt::sig12;
use crate::verify::{
    render_partition_table, render_scan_table, render_sweep_table, verify_lemmas, CycleRule,
    Status, SweepMode, Verifier, VerifyConfig, DEFAULT_TOLERANCE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sombor-cacti",
    version,
    about = "Sombor index of cacti and its extremal graphs"
)]
pub struct Cli {
    /// Write standard output to this file instead.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    EdgeList,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// H(n,t); parameters n t
    #[value(name = "H", alias = "h")]
    H,
    /// H*(2β,t); parameters β t
    #[value(name = "Hstar", alias = "hstar")]
    Hstar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    /// Q(n,t); parameters n t
    #[value(name = "Q", alias = "q")]
    Q,
    /// Φ(β,t); parameters β t
    #[value(name = "Phi", alias = "phi")]
    Phi,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Sombor index of a graph.
    Compute {
        /// Graph file, or "-" for standard input.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        input_format: InputFormat,
    },
    /// Build an extremal graph.
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        first: usize,
        t: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        format: GraphFormat,
    },
    /// List every cactus with n vertices and t cycles, up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        perfect_matching: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        cap_n: usize,
    },
    /// Print Q(n,t) or Φ(β,t).
    Bound {
        #[arg(value_enum)]
        family: BoundArg,
        first: usize,
        t: usize,
    },
    /// Check closed-form maxima and auxiliary claims against enumeration.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(subcommand)]
    mode: VerifyMode,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json, global = true)]
    format: ReportFormat,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, global = true)]
    tolerance: f64,
    #[arg(long, default_value_t = ENUMERATION_CAP, global = true)]
    cap_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepModeArg {
    Cacti,
    PmCacti,
}

#[derive(Debug, Subcommand)]
enum VerifyMode {
    /// Maximum over cacti with n vertices and t cycles.
    MaxCacti {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Maximum over perfectly matchable cacti with 2β vertices and t cycles.
    MaxPmCacti {
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        t: usize,
    },
    /// Case split of perfectly matchable cacti by minimum and support degrees.
    Partitions {
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        t: usize,
    },
    /// Monotonicity and convexity scans of the auxiliary functions.
    Lemmas,
    /// Run max-cacti or max-pm-cacti over a grid of cells.
    Sweep {
        #[arg(long, value_enum)]
        mode: SweepModeArg,
        /// Range of n for cacti, e.g. 5..9.
        #[arg(long, value_parser = parse_range)]
        n: Option<(usize, usize)>,
        /// Range of β for pm-cacti, e.g. 2..4.
        #[arg(long, value_parser = parse_range)]
        beta: Option<(usize, usize)>,
        /// Cycle counts to visit; every feasible one when omitted.
        #[arg(long, value_parser = parse_range)]
        t: Option<(usize, usize)>,
    },
}

/// `a..b` (inclusive) or a single integer.
fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("{x:?} is not a non-negative integer"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((parse(a)?, parse(b)?))
        }
        None => parse(s).map(|v| (v, v)),
    }
}

struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    }
}

/// Parses a single graph. Auto-detection treats a first content line with
/// whitespace inside as an edge-list header, anything else as graph6.
pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph, Error> {
    let content: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let format = match format {
        InputFormat::Auto => match content.first() {
            Some((_, l)) if l.contains(char::is_whitespace) => InputFormat::EdgeList,
            Some(_) => InputFormat::Graph6,
            None => InputFormat::EdgeList,
        },
        f => f,
    };
    if format == InputFormat::EdgeList {
        return parse_edge_list(text);
    }
    // graph6 lines never contain '#', so comment stripping is safe
    match content.as_slice() {
        [] => Err(Error::Graph6 {
            offset: 0,
            msg: "no graph6 line found".into(),
        }),
        [(line, g6)] => decode_graph6(g6).map_err(|e| match e {
            Error::Graph6 { offset, msg } => Error::Graph6 {
                offset,
                msg: format!("line {line}: {msg}"),
            },
            other => other,
        }),
        [_, (line, _), ..] => Err(Error::Graph6 {
            offset: 0,
            msg: format!("line {line}: expected a single graph"),
        }),
    }
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({
        "n": g.order(),
        "m": g.size(),
        "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        "graph6": encode_graph6(g).unwrap_or_default(),
    })
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

struct Output {
    stdout: String,
    stderr: String,
    code: i32,
}

fn execute(cli: Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let mut out = Output {
        stdout: String::new(),
        stderr: String::new(),
        code: EXIT_OK,
    };
    match cli.command {
        Command::Compute {
            input,
            input_format,
        } => {
            let text = read_input(&input, stdin)?;
            let g = parse_graph(&text, input_format)?;
            out.stdout = sig12(sombor_index(&g).value) + "\n";
        }
        Command::Construct {
            family,
            first,
            t,
            format,
        } => {
            let (g, bound) = match family {
                FamilyArg::H => (build_h(first, t)?, bound_q(first, t)?),
                FamilyArg::Hstar => (build_hstar(first, t)?, bound_phi(first, t)?),
            };
            let so = sombor_index(&g).value;
            let cycles = g.cycle_count()?;
            let summary = format!(
                "n={} m={} t={} SO={} bound={}",
                g.order(),
                g.size(),
                cycles,
                sig12(so),
                sig12(bound.value)
            );
            match format {
                GraphFormat::EdgeList => {
                    out.stdout = write_edge_list(&g) + &format!("# {summary}\n");
                }
                GraphFormat::Graph6 => {
                    out.stdout = encode_graph6(&g)? + "\n";
                    out.stderr = summary + "\n";
                }
                GraphFormat::Json => {
                    let mut v = graph_json(&g);
                    v["t"] = json!(cycles);
                    v["sombor"] = json!(sig12(so));
                    v["bound"] = json!(sig12(bound.value));
                    out.stdout = to_json(&v);
                }
            }
        }
        Command::Enumerate {
            n,
            t,
            perfect_matching,
            format,
            cap_n,
        } => {
            let q = EnumerationQuery::new(n, t, perfect_matching)?;
            let list = CactusEnumerator::with_cap(cap_n)?.enumerate(&q)?;
            match format {
                GraphFormat::Graph6 => {
                    for c in &list {
                        out.stdout += c.key.as_str();
                        out.stdout.push('\n');
                    }
                }
                GraphFormat::EdgeList => {
                    let blocks: Vec<String> =
                        list.iter().map(|c| write_edge_list(&c.graph)).collect();
                    out.stdout = blocks.join("\n");
                }
                GraphFormat::Json => {
                    let graphs: Vec<_> = list.iter().map(|c| graph_json(&c.graph)).collect();
                    out.stdout = to_json(&json!({
                        "n": n,
                        "t": t,
                        "perfect_matching": perfect_matching,
                        "count": list.len(),
                        "graphs": graphs,
                    }));
                }
            }
            out.stderr = format!("count {}\n", list.len());
        }
        Command::Bound { family, first, t } => {
            let b = match family {
                BoundArg::Q => bound_q(first, t)?,
                BoundArg::Phi => bound_phi(first, t)?,
            };
            out.stdout = sig12(b.value) + "\n";
        }
        Command::Verify(args) => return run_verify(args),
    }
    Ok(out)
}

fn run_verify(args: VerifyArgs) -> Result<Output, Failure> {
    if !(args.tolerance > 0.0 && args.tolerance.is_finite()) {
        return Err(usage(format!(
            "--tolerance must be positive, got {}",
            args.tolerance
        )));
    }
    let config = VerifyConfig {
        tolerance: args.tolerance,
        enumeration_cap: args.cap_n,
    };
    let mut verifier = Verifier::new(config)?;
    let started = Instant::now();
    let table = args.format == ReportFormat::Table;
    let (stdout, code) = match args.mode {
        VerifyMode::MaxCacti { n, t } => {
            let r = verifier.sweep(SweepMode::Cacti, (n, n), CycleRule::Range(t, t));
            let code = sweep_code(&r.cells.iter().map(|c| c.status).collect::<Vec<_>>());
            (
                if table {
                    render_sweep_table(&r)
                } else {
                    to_json(&r)
                },
                code,
            )
        }
        VerifyMode::MaxPmCacti { beta, t } => {
            let r = verifier.sweep(SweepMode::PmCacti, (beta, beta), CycleRule::Range(t, t));
            let code = sweep_code(&r.cells.iter().map(|c| c.status).collect::<Vec<_>>());
            (
                if table {
                    render_sweep_table(&r)
                } else {
                    to_json(&r)
                },
                code,
            )
        }
        VerifyMode::Partitions { beta, t } => {
            let r = verifier.verify_lemma_partitions(beta, t);
            let code = sweep_code(&[r.status]);
            let body = if table {
                render_partition_table(&r)
            } else {
                to_json(&json!({ "provenance": verifier.provenance(), "partition": r }))
            };
            (body, code)
        }
        VerifyMode::Lemmas => {
            let r = verify_lemmas(&config)?;
            let mut body = if table {
                let mut s = render_scan_table(&r.scans);
                for c in &r.curvature {
                    s += &format!(
                        "{} second difference on [{}, {}]: min {} ({})\n",
                        c.scan.name,
                        c.scan.grid.start,
                        c.scan.grid.stop,
                        sig12(c.scan.min_second_difference),
                        if c.pass { "positive" } else { "not positive" }
                    );
                }
                s
            } else {
                to_json(&r)
            };
            if table {
                body += if r.all_pass { "all pass\n" } else { "FAILED\n" };
            }
            (body, if r.all_pass { EXIT_OK } else { EXIT_FAIL })
        }
        VerifyMode::Sweep { mode, n, beta, t } => {
            let (mode, range) = match (mode, n, beta) {
                (SweepModeArg::Cacti, Some(r), None) => (SweepMode::Cacti, r),
                (SweepModeArg::PmCacti, None, Some(r)) => (SweepMode::PmCacti, r),
                (SweepModeArg::Cacti, _, _) => return Err(usage("--mode cacti takes --n A..B")),
                (SweepModeArg::PmCacti, _, _) => {
                    return Err(usage("--mode pm-cacti takes --beta A..B"))
                }
            };
            let rule = t.map_or(CycleRule::AllFeasible, |(lo, hi)| CycleRule::Range(lo, hi));
            let r = verifier.sweep(mode, range, rule);
            let code = sweep_code(&r.cells.iter().map(|c| c.status).collect::<Vec<_>>());
            (
                if table {
                    render_sweep_table(&r)
                } else {
                    to_json(&r)
                },
                code,
            )
        }
    };
    Ok(Output {
        stdout,
        stderr: format!("elapsed {:.3}s\n", started.elapsed().as_secs_f64()),
        code,
    })
}

fn sweep_code(statuses: &[Status]) -> i32 {
    if statuses.contains(&Status::Error) {
        EXIT_USAGE
    } else if statuses.contains(&Status::Fail) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let output_path = cli.output.clone();
    match execute(cli, stdin) {
        Ok(out) => {
            let written = match &output_path {
                Some(p) => fs::write(p, &out.stdout),
                None => stdout.write_all(out.stdout.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: writing output: {e}");
                return EXIT_USAGE;
            }
            let _ = stderr.write_all(out.stderr.as_bytes());
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            f.code
        }
    }
}

pub fn main_with_std() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
