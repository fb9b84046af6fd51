//! The `etaedge` command line.
//!
//! Every subcommand prints one JSON report on standard output. Exit status
//! is 0 on success, 1 on any error (reported as
//! `{"error": {"kind": .., "message": ..}}`) and 2 when a search runs out
//! of budget.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::additive::{bound_thm24, build_an, check_difference_condition, verify_additive};
use crate::budget::{Budgeted, NodeBudget, DEFAULT_NODE_BUDGET};
use crate::coloring::EdgeColoring;
use crate::constructions::{build_high_resistance, generate, Family};
use crate::error::{Error, Result};
use crate::exact::{classify, resistance, ClassResult};
use crate::graph::Graph;
use crate::io::{read_graph, write_graph, GraphFormat};
use crate::label_set::LabelSet;
use crate::oracle::{exact_eta_p_prime, exact_resistance, sample_proper_coloring, verify_strong_set};
use crate::spaced::{is_spaced, make_spaced, spaced_to_additive, SpacedOutcome};
use crate::vizing::{bipartite_edge_color, proper_edge_color};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "etaedge", version, about = "Proper additive edge colorings of regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphIn {
    /// Input graph file (`-` for standard input).
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    /// graph6, edgelist or json; guessed from the content when omitted.
    #[arg(long)]
    input_format: Option<GraphFormat>,
}

#[derive(Debug, Args)]
struct GraphOut {
    /// Format of graph payloads in the report and in `--out`.
    #[arg(long, default_value = "graph6")]
    format: GraphFormat,
    /// Also write the graph payload to this file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a named graph.
    Generate {
        /// cycle, complete, complete_bipartite, hypercube, petersen or heawood.
        #[arg(long)]
        family: Family,
        /// Family parameters, e.g. `--param 4 --param 4`.
        #[arg(long = "param")]
        params: Vec<usize>,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Build a d-regular graph with resistance d/2 from a d-regular bipartite seed.
    #[command(name = "build-p214")]
    BuildP214 {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        graph: GraphIn,
        /// Proper d-coloring of the seed; computed when omitted.
        #[arg(long, value_name = "PATH")]
        coloring: Option<PathBuf>,
        /// Seed edge to subdivide.
        #[arg(long)]
        edge: Option<usize>,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Properly edge-color a graph.
    Color {
        #[command(flatten)]
        graph: GraphIn,
        /// `vizing` (at most Δ+1 labels) or `bipartite` (Δ labels).
        #[arg(long, default_value = "vizing")]
        method: String,
    },
    /// Decide class 1 or class 2 of a regular graph.
    Classify {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Resistance of a regular graph with a witness coloring.
    Resistance {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Check whether a coloring is additive.
    Verify {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "PATH")]
        coloring: PathBuf,
        /// Do not require the coloring to be proper.
        #[arg(long)]
        allow_improper: bool,
    },
    /// Build A_n, or test a given set for the difference condition.
    Labelset {
        #[arg(long, conflicts_with = "labels", required_unless_present = "labels")]
        n: Option<u32>,
        /// Comma-separated labels.
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<u64>>,
    },
    /// Largest label needed for a d-regular graph via A_n.
    Bound {
        #[arg(long)]
        d: u64,
    },
    /// Spaced colorings: check, transform to additive, or construct.
    Spaced {
        #[command(flatten)]
        graph: GraphIn,
        /// Required for `--check` and `--transform`; for `--make` a
        /// minimum-class witness is computed when omitted.
        #[arg(long, value_name = "PATH")]
        coloring: Option<PathBuf>,
        /// Report whether the coloring is spaced
        #[arg(long, group = "mode")]
        check: bool,
        /// Turn a spaced coloring into an additive one
        #[arg(long, group = "mode")]
        transform: bool,
        /// Recolor a minimum-class coloring into a spaced one
        #[arg(long, group = "mode")]
        make: bool,
        /// Step budget for `--make` (default 6|E|).
        #[arg(long)]
        budget: Option<usize>,
        /// Node budget for computing the starting coloring.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Write the full recoloring trace here.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Brute-force oracles for small graphs.
    Oracle {
        #[command(flatten)]
        graph: GraphIn,
        /// Smallest k with an additive coloring from 1..=k
        #[arg(long, group = "mode")]
        eta_p_prime: bool,
        /// Exhaustive resistance
        #[arg(long, group = "mode")]
        resistance: bool,
        /// Check that every proper coloring from `--labels` is additive
        #[arg(long, group = "mode")]
        strong_set: bool,
        /// Label set for `--strong-set`.
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<u64>>,
        /// Largest label tried by `--eta-p-prime`.
        #[arg(long, default_value_t = 16)]
        max_label: u64,
        /// For `--strong-set`: check this many seeded random proper
        /// colorings instead of enumerating all of them.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Girth of a graph (`null` for forests).
    Girth {
        #[command(flatten)]
        graph: GraphIn,
    },
}

/// Outcome of a subcommand before rendering.
enum Report {
    Ok(Value),
    Budget(Value),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serialization")
}

fn read_file(path: &Path) -> Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)
            .map_err(|e| Error::precondition(format!("cannot read standard input: {e}")))?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| Error::precondition(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::precondition(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(a: &GraphIn) -> Result<Graph> {
    let bytes = read_file(&a.input)?;
    read_graph(&bytes, a.input_format.unwrap_or_else(|| GraphFormat::sniff(&bytes)))
}

fn load_coloring(path: &Path, g: &Graph) -> Result<EdgeColoring> {
    let bytes = read_file(path)?;
    EdgeColoring::from_json(&String::from_utf8_lossy(&bytes), g)
}

fn graph_payload(g: &Graph, out: &GraphOut) -> Result<Value> {
    let bytes = write_graph(g, out.format);
    if let Some(path) = &out.out {
        write_file(path, &bytes)?;
    }
    Ok(match out.format {
        GraphFormat::Json => to_value(g),
        _ => Value::String(String::from_utf8(bytes).expect("text formats are UTF-8")),
    })
}

fn budgeted<T: Serialize>(b: Budgeted<T>) -> Report {
    match b {
        Budgeted::Done(v) => Report::Ok(to_value(&v)),
        unknown => Report::Budget(to_value(&unknown)),
    }
}

fn run(cmd: Command) -> Result<Report> {
    Ok(match cmd {
        Command::Generate { family, params, out } => {
            let g = generate(family, &params)?;
            Report::Ok(json!({
                "family": family.name(),
                "params": params,
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "format": out.format.name(),
                "graph": graph_payload(&g, &out)?,
            }))
        }
        Command::BuildP214 { d, graph, coloring, edge, out } => {
            let seed = load_graph(&graph)?;
            let seed_coloring = coloring.map(|p| load_coloring(&p, &seed)).transpose()?;
            let b = build_high_resistance(d, &seed, seed_coloring.as_ref(), edge)?;
            Report::Ok(json!({
                "d": d,
                "vertices": b.graph.vertex_count(),
                "edges": b.graph.edge_count(),
                "heavy_class": b.heavy_class,
                "identified": b.identified,
                "subdivided": b.subdivided,
                "copy_map": b.copy_map,
                "coloring": b.coloring,
                "format": out.format.name(),
                "graph": graph_payload(&b.graph, &out)?,
            }))
        }
        Command::Color { graph, method } => {
            let g = load_graph(&graph)?;
            let c = match method.as_str() {
                "vizing" => proper_edge_color(&g),
                "bipartite" => bipartite_edge_color(&g)?,
                other => return Err(Error::precondition(format!("unknown coloring method {other:?}"))),
            };
            Report::Ok(json!({ "max_label": c.max_label(), "coloring": c }))
        }
        Command::Classify { graph, budget } => {
            let r = classify(&load_graph(&graph)?, budget)?;
            match r {
                ClassResult::Unknown { .. } => Report::Budget(to_value(&r)),
                _ => Report::Ok(to_value(&r)),
            }
        }
        Command::Resistance { graph, budget } => budgeted(resistance(&load_graph(&graph)?, budget)?),
        Command::Verify { graph, coloring, allow_improper } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            Report::Ok(to_value(&verify_additive(&g, &c, !allow_improper)?))
        }
        Command::Labelset { n, labels } => {
            let set = match (n, labels) {
                (Some(n), _) => build_an(n)?,
                (None, Some(labels)) => LabelSet::new(labels)?,
                (None, None) => unreachable!("clap requires one of --n, --labels"),
            };
            Report::Ok(json!({
                "elements": set.as_slice(),
                "max": set.max(),
                "difference_condition": check_difference_condition(&set),
            }))
        }
        Command::Bound { d } => {
            let b = bound_thm24(d)?;
            Report::Ok(json!({
                "d": d,
                "n": b.n,
                "paper_bound": b.paper_bound,
                "refined_bound": b.refined_bound,
            }))
        }
        Command::Spaced { graph, coloring, check, transform, make, budget, node_budget, trace } => {
            let g = load_graph(&graph)?;
            let c = coloring.map(|p| load_coloring(&p, &g)).transpose()?;
            let need = || Error::precondition("--coloring is required");
            if check {
                Report::Ok(json!({ "spaced": is_spaced(&g, &c.ok_or_else(need)?)? }))
            } else if transform {
                let out = spaced_to_additive(&g, &c.ok_or_else(need)?)?;
                let verdict = verify_additive(&g, &out, true)?;
                Report::Ok(json!({
                    "coloring": out,
                    "max_label": out.max_label(),
                    "sums": verdict.sums,
                }))
            } else if make {
                let start = match c {
                    Some(c) => c,
                    None => match resistance(&g, node_budget)? {
                        Budgeted::Done(r) => r.witness,
                        unknown => return Ok(Report::Budget(to_value(&unknown))),
                    },
                };
                let rep = make_spaced(&g, &start, budget)?;
                if let Some(path) = &trace {
                    let text = serde_json::to_string_pretty(&rep.trace).expect("trace serialization");
                    write_file(path, text.as_bytes())?;
                }
                let summary = json!({
                    "outcome": rep.outcome,
                    "r": rep.r,
                    "girth": rep.girth,
                    "girth_hypothesis": rep.girth_hypothesis,
                    "step_budget": rep.step_budget,
                    "steps": rep.trace.total_steps(),
                    "phases": rep.trace.phases.iter().map(|p| json!({
                        "phase": p.phase,
                        "steps": p.steps.len(),
                        "status": p.status,
                    })).collect::<Vec<_>>(),
                });
                match rep.outcome {
                    SpacedOutcome::Success { .. } => Report::Ok(summary),
                    SpacedOutcome::BudgetExhausted { .. } => Report::Budget(summary),
                }
            } else {
                return Err(Error::precondition("one of --check, --transform, --make is required"));
            }
        }
        Command::Oracle { graph, eta_p_prime, resistance: res, strong_set, labels, max_label, samples, seed, budget } => {
            let g = load_graph(&graph)?;
            if eta_p_prime {
                budgeted(exact_eta_p_prime(&g, max_label, budget)?)
            } else if res {
                budgeted(exact_resistance(&g, budget)?)
            } else if strong_set {
                let a = LabelSet::new(labels.ok_or_else(|| Error::precondition("--labels is required"))?)?;
                match samples {
                    None => budgeted(verify_strong_set(&g, &a, budget)?),
                    Some(k) => sample_strong_set(&g, &a, k, seed, budget)?,
                }
            } else {
                return Err(Error::precondition("one of --eta-p-prime, --resistance, --strong-set is required"));
            }
        }
        Command::Girth { graph } => Report::Ok(json!({ "girth": load_graph(&graph)?.girth() })),
    })
}

fn sample_strong_set(g: &Graph, a: &LabelSet, samples: usize, seed: u64, budget: u64) -> Result<Report> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut nodes = NodeBudget::new(budget);
    for i in 0..samples {
        match sample_proper_coloring(g, a, &mut rng, &mut nodes) {
            Budgeted::Unknown { expanded } => {
                return Ok(Report::Budget(json!({ "status": "unknown", "expanded": expanded, "checked": i })))
            }
            Budgeted::Done(None) => {
                return Err(Error::precondition(format!("graph has no proper coloring from {a}")))
            }
            Budgeted::Done(Some(c)) => {
                if !verify_additive(g, &c, true)?.ok {
                    return Ok(Report::Ok(json!({
                        "strong": false,
                        "method": "sampling",
                        "checked": i + 1,
                        "counterexample": c,
                    })));
                }
            }
        }
    }
    Ok(Report::Ok(json!({
        "strong": true,
        "method": "sampling",
        "checked": samples,
        "counterexample": null,
    })))
}

fn error_report(kind: &str, message: &str) -> String {
    let v = json!({ "error": { "kind": kind, "message": message } });
    format!("{v}\n")
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code together with everything meant for standard output.
pub fn execute<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (EXIT_OK, e.to_string()),
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => (EXIT_ERROR, e.to_string()),
                _ => (EXIT_ERROR, error_report("usage", e.to_string().trim())),
            };
        }
    };
    match run(cli.command) {
        Ok(Report::Ok(v)) => (EXIT_OK, format!("{v}\n")),
        Ok(Report::Budget(v)) => (EXIT_BUDGET, format!("{v}\n")),
        Err(e) => (EXIT_ERROR, error_report(e.kind(), &e.to_string())),
    }
}
