//! Command-line front end.
//!
//! Exit codes: 0 on success or all checks passing, 1 when a check fails
//! (its witness is printed), 2 on usage, input or budget errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::check::CheckReport;
use crate::chrompoly::{
    check_oracle_graph, check_reciprocity_graph_poly, check_reciprocity_graph_range, chi_brute, chi_poly,
};
use crate::graph::{Graph, GraphJson};
use crate::orderpoly::oracle::brute_count;
use crate::orderpoly::{check_oracle_poset, check_reciprocity_poset, omega, Mode};
use crate::poset::{BicoloredPoset, PosetJson};
use crate::scalar::Budget;
use crate::Poly;

/// Largest `x` used by the numeric graph reciprocity check.
pub const GRAPH_RECIPROCITY_MAX_X: u64 = 5;

#[derive(Debug, Parser)]
#[command(name = "biorder", version, about = "Bivariate order and chromatic polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Strict,
    Weak,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Weak => Mode::Weak,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    PosetReciprocity,
    GraphReciprocity,
    Oracle,
    All,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// JSON input file (`-` reads standard input).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order polynomial of a bicolored poset.
    PosetPoly {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
    },
    /// Brute-force count of (strictly) order preserving (x,y)-maps.
    PosetCount {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        #[arg(long = "x")]
        x: u64,
        #[arg(long = "y")]
        y: u64,
        #[arg(long, default_value_t = Budget::DEFAULT.0)]
        budget: u64,
    },
    /// Bivariate chromatic polynomial of a graph.
    GraphPoly {
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force count of bivariate colorings.
    GraphCount {
        #[command(flatten)]
        common: Common,
        #[arg(long = "x")]
        x: u64,
        #[arg(long = "y")]
        y: u64,
        #[arg(long, default_value_t = Budget::DEFAULT.0)]
        budget: u64,
    },
    /// Linear extensions of a poset.
    ListExtensions {
        #[command(flatten)]
        common: Common,
    },
    /// Flats (connected contractions) of a graph.
    ListFlats {
        #[command(flatten)]
        common: Common,
    },
    /// Acyclic orientations of a graph.
    ListOrientations {
        #[command(flatten)]
        common: Common,
    },
    /// Run verification checks.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "all")]
        kind: CheckKind,
        #[arg(long, default_value_t = Budget::DEFAULT.0)]
        budget: u64,
    },
}

enum Input {
    Poset(BicoloredPoset),
    Graph(Graph),
}

fn read_input(path: &Path) -> anyhow::Result<Value> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    serde_json::from_str(&text).with_context(|| format!("parsing JSON from {}", path.display()))
}

fn load_poset(path: &Path) -> anyhow::Result<BicoloredPoset> {
    let json: PosetJson = serde_json::from_value(read_input(path)?).context("expected poset JSON")?;
    Ok(BicoloredPoset::from_json(&json)?)
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let json: GraphJson = serde_json::from_value(read_input(path)?).context("expected graph JSON")?;
    Ok(Graph::from_json(&json)?)
}

/// Graph JSON carries `edges`; anything else is read as a poset.
fn load_any(path: &Path) -> anyhow::Result<Input> {
    let value = read_input(path)?;
    if value.get("edges").is_some() {
        let json: GraphJson = serde_json::from_value(value).context("expected graph JSON")?;
        Ok(Input::Graph(Graph::from_json(&json)?))
    } else {
        let json: PosetJson = serde_json::from_value(value).context("expected poset JSON")?;
        Ok(Input::Poset(BicoloredPoset::from_json(&json)?))
    }
}

fn render_poly(p: &Poly, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(&p.to_json())?),
    })
}

fn render_json(v: &Value) -> anyhow::Result<String> {
    Ok(format!("{}\n", serde_json::to_string(v)?))
}

fn list_blocks(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_checks(input: &Input, kind: CheckKind, budget: Budget) -> anyhow::Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    match input {
        Input::Poset(p) => {
            if kind == CheckKind::GraphReciprocity {
                bail!("graph-reciprocity needs graph input");
            }
            if matches!(kind, CheckKind::PosetReciprocity | CheckKind::All) {
                reports.push(check_reciprocity_poset(p));
            }
            if matches!(kind, CheckKind::Oracle | CheckKind::All) {
                reports.push(check_oracle_poset(p, budget)?);
            }
        }
        Input::Graph(g) => {
            if kind == CheckKind::PosetReciprocity {
                bail!("poset-reciprocity needs poset input");
            }
            if matches!(kind, CheckKind::GraphReciprocity | CheckKind::All) {
                reports.push(check_reciprocity_graph_range(g, GRAPH_RECIPROCITY_MAX_X, budget)?);
                reports.push(check_reciprocity_graph_poly(g));
            }
            if matches!(kind, CheckKind::Oracle | CheckKind::All) {
                reports.push(check_oracle_graph(g, budget)?);
            }
        }
    }
    Ok(reports)
}

/// Executes one command; returns the exit code and the standard output text.
fn execute(cli: Cli) -> anyhow::Result<(i32, String)> {
    let mut out = String::new();
    let mut code = 0;
    match cli.command {
        Command::PosetPoly { common, mode } => {
            let p = load_poset(&common.input)?;
            out = render_poly(&omega::<crate::Rational>(&p, mode.into()), common.format)?;
        }
        Command::PosetCount {
            common,
            mode,
            x,
            y,
            budget,
        } => {
            let p = load_poset(&common.input)?;
            let mode: Mode = mode.into();
            let count = brute_count(&p, mode, x, y, Budget(budget))?;
            out = match common.format {
                Format::Text => format!("{count}\n"),
                Format::Json => render_json(&json!({ "mode": mode, "x": x, "y": y, "count": count }))?,
            };
        }
        Command::GraphPoly { common } => {
            let g = load_graph(&common.input)?;
            out = render_poly(&chi_poly::<crate::Rational>(&g), common.format)?;
        }
        Command::GraphCount { common, x, y, budget } => {
            let g = load_graph(&common.input)?;
            let count = chi_brute(&g, x, y, Budget(budget))?;
            out = match common.format {
                Format::Text => format!("{count}\n"),
                Format::Json => render_json(&json!({ "x": x, "y": y, "count": count }))?,
            };
        }
        Command::ListExtensions { common } => {
            let p = load_poset(&common.input)?;
            let exts = p.linear_extensions();
            match common.format {
                Format::Text => {
                    for e in &exts {
                        let line: Vec<_> = e.order.iter().map(|a| a.to_string()).collect();
                        writeln!(out, "{}", line.join(" "))?;
                    }
                }
                Format::Json => {
                    let v: Vec<_> = exts.iter().map(|e| e.order.clone()).collect();
                    out = render_json(&json!(v))?;
                }
            }
        }
        Command::ListFlats { common } => {
            let g = load_graph(&common.input)?;
            let flats = g.flats();
            match common.format {
                Format::Text => {
                    for f in &flats {
                        let edges: Vec<_> = f.quotient.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                        writeln!(
                            out,
                            "blocks: {} | contracted: {:?} | edges: [{}]",
                            list_blocks(&f.blocks),
                            f.contracted,
                            edges.join(", ")
                        )?;
                    }
                }
                Format::Json => {
                    let v: Vec<_> = flats
                        .iter()
                        .map(|f| json!({ "blocks": f.blocks, "contracted": f.contracted, "quotient": f.quotient.to_json() }))
                        .collect();
                    out = render_json(&json!(v))?;
                }
            }
        }
        Command::ListOrientations { common } => {
            let g = load_graph(&common.input)?;
            let orientations = g.acyclic_orientations();
            match common.format {
                Format::Text => {
                    for o in &orientations {
                        let arcs: Vec<_> = o.arcs().iter().map(|(a, b)| format!("{a}->{b}")).collect();
                        writeln!(out, "{}", arcs.join(" "))?;
                    }
                }
                Format::Json => {
                    let v: Vec<_> = orientations
                        .iter()
                        .map(|o| o.arcs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>())
                        .collect();
                    out = render_json(&json!(v))?;
                }
            }
        }
        Command::Check { common, kind, budget } => {
            let input = load_any(&common.input)?;
            let reports = run_checks(&input, kind, Budget(budget))?;
            if reports.iter().any(|r| !r.passed) {
                code = 1;
            }
            match common.format {
                Format::Text => {
                    for r in &reports {
                        writeln!(out, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name)?;
                        if !r.passed {
                            writeln!(out, "  witness: {}", serde_json::to_string(&r.witness)?)?;
                        }
                    }
                }
                Format::Json => out = render_json(&serde_json::to_value(&reports)?)?,
            }
        }
    }
    Ok((code, out))
}

/// Parses `args` (including the program name), runs the command, and writes
/// results to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli) {
        Ok((code, text)) => {
            if stdout.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            2
        }
    }
}
