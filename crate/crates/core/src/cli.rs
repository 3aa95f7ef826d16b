//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or comparison fails,
//! 2 on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::a2::{check_axioms_a, decorated_from_json, DECORATED_FORMAT};
use crate::axioms::verify;
use crate::error::{Error, Result};
use crate::graph::{
    edge_delta, from_json, is_isomorphic, string_length_histogram, to_dot, to_json, ColoredDigraph,
    EdgeColor,
};
use crate::littelmann::{
    check_cones_and_relations, cone_realization_check, strict_cone_realization_check, SweepReport,
};
use crate::report::Report;
use crate::sails::build_s;
use crate::worm_graph::{build_w, WormBox};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "b2crystal",
    version,
    about = "Build and verify regular B2-crystals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build S(a,b) by the sail construction.
    BuildS {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[command(flatten)]
        export: Export,
    },
    /// Build the worm graph W(a,b) or a general box.
    BuildW {
        #[arg(long, required_unless_present = "box_bounds", requires = "b")]
        a: Option<u32>,
        #[arg(long, requires = "a")]
        b: Option<u32>,
        /// Box bounds a1,b1,a2,b2.
        #[arg(long = "box", value_name = "A1,B1,A2,B2", conflicts_with_all = ["a", "b"])]
        box_bounds: Option<String>,
        #[command(flatten)]
        export: Export,
    },
    /// Check the B-axioms and BA on a graph file (`-` reads stdin).
    /// Decorated graph files are checked against the RA2 axioms instead.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Compare S(a,b) with W(a,b), or two graph files, up to isomorphism
    /// respecting central marks.
    Compare {
        #[arg(long, requires = "b", conflicts_with = "files")]
        a: Option<u32>,
        #[arg(long, requires = "a")]
        b: Option<u32>,
        #[arg(num_args = 2, required_unless_present = "a")]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Check the string quadruples on the worm model of B(∞).
    Littelmann {
        #[arg(long)]
        depth: u32,
        #[arg(long)]
        cone_bound: Option<u32>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Summarize a graph file.
    Stats {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
}

#[derive(Args, Debug)]
struct Export {
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    format: GraphFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_error(what: &str, e: std::io::Error) -> Error {
    Error::Io {
        path: what.to_string(),
        message: e.to_string(),
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| io_error("stdin", e))?;
    } else {
        text =
            std::fs::read_to_string(path).map_err(|e| io_error(&path.display().to_string(), e))?;
    }
    Ok(text)
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<()> {
    match stdout.write_all(text.as_bytes()) {
        // A closed pipe (e.g. `| head`) is not an error for a filter.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other.map_err(|e| io_error("stdout", e)),
    }
}

fn export(g: &ColoredDigraph, opts: &Export, stdout: &mut dyn Write) -> Result<i32> {
    let text = match opts.format {
        GraphFormat::Json => to_json(g),
        GraphFormat::Dot => to_dot(g),
    };
    match &opts.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| io_error(&path.display().to_string(), e))?
        }
        None => {
            emit(stdout, &text)?;
            if !text.ends_with('\n') {
                emit(stdout, "\n")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_box(spec: &str) -> Result<WormBox> {
    let bad = |m: &str| Error::Parameter(format!("--box {spec:?}: {m}"));
    let parts: Vec<i64> = spec
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad("expected four integers"))?;
    let [a1, b1, a2, b2] = parts[..] else {
        return Err(bad("expected four integers"));
    };
    if a1 > b1 || a2 > b2 {
        return Err(bad("needs a1 <= b1 and a2 <= b2"));
    }
    Ok(WormBox::new(a1, b1, a2, b2))
}

fn render_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => report.to_string(),
        ReportFormat::Json => report.to_json() + "\n",
    }
}

#[derive(Serialize)]
struct Comparison {
    isomorphic: bool,
    left_vertices: usize,
    right_vertices: usize,
}

#[derive(Serialize)]
struct Stats {
    vertices: usize,
    edges: usize,
    central_vertices: usize,
    central_edges: usize,
    string_lengths: BTreeMap<String, BTreeMap<usize, usize>>,
    deltas: BTreeMap<String, BTreeMap<String, usize>>,
}

fn stats_of(g: &ColoredDigraph) -> Result<Stats> {
    let mut string_lengths = BTreeMap::new();
    let mut deltas: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    for c in EdgeColor::BOTH {
        string_lengths.insert(c.to_string(), string_length_histogram(g, c)?);
        deltas.insert(c.to_string(), BTreeMap::new());
    }
    for e in 0..g.edge_count() {
        let (dt, dh) = edge_delta(g, e);
        *deltas
            .get_mut(&g.edge(e).color.to_string())
            .expect("both colors present")
            .entry(format!("({dt},{dh})"))
            .or_insert(0) += 1;
    }
    Ok(Stats {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        central_vertices: g.central_vertices().count(),
        central_edges: g.central_edges().count(),
        string_lengths,
        deltas,
    })
}

fn stats_text(s: &Stats) -> String {
    let mut out = format!(
        "vertices: {}\nedges: {}\ncentral vertices: {}\ncentral edges: {}\n",
        s.vertices, s.edges, s.central_vertices, s.central_edges
    );
    for (color, hist) in &s.string_lengths {
        let parts: Vec<String> = hist.iter().map(|(l, n)| format!("{l}:{n}")).collect();
        out.push_str(&format!("{color}-string lengths: {}\n", parts.join(" ")));
    }
    for (color, hist) in &s.deltas {
        let parts: Vec<String> = hist.iter().map(|(d, n)| format!("{d}:{n}")).collect();
        out.push_str(&format!("{color}-edge deltas: {}\n", parts.join(" ")));
    }
    out
}

fn sweep_text(name: &str, r: &SweepReport) -> String {
    let mut out = format!(
        "{name}: checked {}, failures {}\n",
        r.checked,
        r.failures.len()
    );
    for f in r.failures.iter().take(10) {
        out.push_str(&format!("    {f}\n"));
    }
    out
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::BuildS { a, b, export: opts } => {
            let g = build_s(a.into(), b.into())?;
            export(&g, &opts, stdout)
        }
        Command::BuildW {
            a,
            b,
            box_bounds,
            export: opts,
        } => {
            let bx = match (box_bounds, a, b) {
                (Some(spec), _, _) => parse_box(&spec)?,
                (None, Some(a), Some(b)) => WormBox::ab(a.into(), b.into()),
                _ => return Err(Error::Parameter("give --a and --b, or --box".into())),
            };
            export(&build_w(&bx), &opts, stdout)
        }
        Command::Verify { file, report } => {
            let text = read_input(&file)?;
            let result = if text.contains(DECORATED_FORMAT) {
                check_axioms_a(&decorated_from_json(&text)?)
            } else {
                verify(&from_json(&text)?)
            };
            emit(stdout, &render_report(&result, report))?;
            Ok(if result.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Compare {
            a,
            b,
            files,
            report,
        } => {
            let (left, right) = match (a, b) {
                (Some(a), Some(b)) => (
                    build_s(a.into(), b.into())?,
                    build_w(&WormBox::ab(a.into(), b.into())),
                ),
                _ => (
                    from_json(&read_input(&files[0])?)?,
                    from_json(&read_input(&files[1])?)?,
                ),
            };
            let iso = is_isomorphic(&left, &right, true)?.is_some();
            let result = Comparison {
                isomorphic: iso,
                left_vertices: left.vertex_count(),
                right_vertices: right.vertex_count(),
            };
            let text = match report {
                ReportFormat::Json => {
                    serde_json::to_string_pretty(&result).expect("comparison serializes") + "\n"
                }
                ReportFormat::Text => format!(
                    "{} ({} and {} vertices)\n",
                    if iso { "isomorphic" } else { "not isomorphic" },
                    result.left_vertices,
                    result.right_vertices
                ),
            };
            emit(stdout, &text)?;
            Ok(if iso { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Littelmann {
            depth,
            cone_bound,
            report,
        } => {
            let mut sweeps = vec![("relations", check_cones_and_relations(depth.into()))];
            if let Some(b) = cone_bound {
                sweeps.push(("cone realization", cone_realization_check(b.into())));
                sweeps.push((
                    "strict cone realization",
                    strict_cone_realization_check(b.into()),
                ));
            }
            let passed = sweeps.iter().all(|(_, r)| r.passed());
            let text = match report {
                ReportFormat::Json => {
                    let mut merged = SweepReport::default();
                    for (_, r) in &sweeps {
                        merged.checked += r.checked;
                        merged.failures.extend(r.failures.iter().cloned());
                    }
                    merged.to_json() + "\n"
                }
                ReportFormat::Text => sweeps.iter().map(|(n, r)| sweep_text(n, r)).collect(),
            };
            emit(stdout, &text)?;
            Ok(if passed { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Stats { file, report } => {
            let g = from_json(&read_input(&file)?)?;
            let s = stats_of(&g)?;
            let text = match report {
                ReportFormat::Json => {
                    serde_json::to_string_pretty(&s).expect("stats serialize") + "\n"
                }
                ReportFormat::Text => stats_text(&s),
            };
            emit(stdout, &text)?;
            Ok(EXIT_OK)
        }
    }
}
