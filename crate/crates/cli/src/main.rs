//! `din`: generate DAG families, build and verify directed intersection
//! representations, compute exact DINs and evaluate bound formulas.
//!
//! Exit codes: 0 success/valid, 1 invalid representation, 2 usage or parse
//! error, 3 cyclic input, 4 solver budget exhausted.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use din_core::bounds::{self, Formula};
use din_core::construct::{self, closed_form_for, ClosedForm, Method};
use din_core::solver::extremal_din;
use din_core::{
    exact_din, gen_family, verify, Digraph, Error, Family, Representation, SolveBudget, SolveOptions, SolveStatus,
};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CYCLIC: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "din", version, about = "Directed intersection representations of DAGs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write a member of a named family as a graph file.
    Gen {
        /// directed-path, star, complete-dag, source-arc-path, augmented, fig3-tree-small, fig3-tree-large
        family: String,
        n: usize,
        /// Output path, `-` for stdout.
        #[arg(short, long, default_value = "-")]
        out: String,
        #[arg(long, value_enum, default_value = "text")]
        format: GraphFormat,
    },
    /// Build a representation and write it as JSON.
    Construct {
        /// Graph file, `-` for stdin.
        graph: String,
        #[arg(short, long, default_value = "inductive")]
        method: String,
        /// Output path, `-` for stdout.
        #[arg(short, long, default_value = "-")]
        out: String,
    },
    /// Check a representation against a graph.
    Verify { graph: String, rep: String },
    /// Compute the exact directed intersection number.
    Din {
        graph: String,
        #[arg(long, default_value_t = SolveBudget::default().max_nodes)]
        budget_nodes: u64,
        #[arg(long, default_value_t = SolveBudget::default().max_palette)]
        max_palette: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the witness representation here.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate bound formulas at n.
    Bound {
        n: u64,
        /// general, lemma, directed-path, source-arc-path, augmented, p-intersection
        #[arg(long)]
        formula: Option<String>,
        /// With `--formula p-intersection`, n is read as the DIN and this is p.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Maximum exact DIN over all DAGs on n vertices.
    Extremal {
        n: usize,
        /// Permit n = 6 (tens of millions of search nodes).
        #[arg(long)]
        allow_six: bool,
        #[arg(long, default_value_t = SolveBudget::default().max_nodes)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = if err == Error::Cyclic { EXIT_CYCLIC } else { EXIT_USAGE };
        Failure { code, message: err.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    }
}

fn write_output(path: &str, content: &str) -> Result<(), Failure> {
    if path == "-" {
        io::stdout().write_all(content.as_bytes()).map_err(|e| usage(format!("writing stdout: {e}")))
    } else {
        fs::write(path, content).map_err(|e| usage(format!("writing {path}: {e}")))
    }
}

fn load_graph(path: &str) -> Result<Digraph, Failure> {
    Ok(Digraph::parse(&read_input(path)?)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen { family, n, out, format } => {
            let family: Family = family.parse()?;
            let graph = gen_family(family, n)?;
            let text = match format {
                GraphFormat::Text => graph.to_edge_list(),
                GraphFormat::Json => graph.to_json() + "\n",
            };
            write_output(&out, &text)?;
            Ok(0)
        }
        Command::Construct { graph, method, out } => cmd_construct(&graph, &method, &out),
        Command::Verify { graph, rep } => {
            let graph = load_graph(&graph)?;
            let rep = Representation::from_json(&read_input(&rep)?)?;
            let report = verify(&graph, &rep)?;
            if report.valid {
                println!("VALID");
                Ok(0)
            } else {
                for v in &report.violations {
                    println!("{v}");
                }
                Ok(EXIT_INVALID)
            }
        }
        Command::Din { graph, budget_nodes, max_palette, threads, witness, json } => {
            let graph = load_graph(&graph)?;
            let budget = SolveBudget::new(budget_nodes, max_palette)?;
            cmd_din(&graph, SolveOptions { budget, threads: threads.max(1) }, witness.as_deref(), json)
        }
        Command::Bound { n, formula, p } => cmd_bound(n, formula.as_deref(), p),
        Command::Extremal { n, allow_six, budget_nodes, threads, json } => {
            let budget = SolveBudget::new(budget_nodes, SolveBudget::default().max_palette)?;
            let result = extremal_din(n, allow_six, &SolveOptions { budget, threads: threads.max(1) })?;
            if json {
                println!("{}", serde_json::to_string(&result).expect("serializable"));
            } else {
                let qualifier = if result.is_complete() { "" } else { " (lower bound; some solves ran out of budget)" };
                println!("n = {}: max DIN = {}{qualifier}", result.n, result.max_din);
                println!("graphs checked = {}", result.graphs_checked);
                for g in &result.witnesses {
                    let arcs: Vec<String> = g.arcs().map(|(t, h)| format!("{t}->{h}")).collect();
                    println!("extremal: {}", arcs.join(" "));
                }
                for g in &result.unresolved {
                    let arcs: Vec<String> = g.arcs().map(|(t, h)| format!("{t}->{h}")).collect();
                    println!("unresolved: {}", arcs.join(" "));
                }
            }
            Ok(if result.is_complete() { 0 } else { EXIT_BUDGET })
        }
    }
}

fn cmd_construct(graph_path: &str, method: &str, out: &str) -> Result<u8, Failure> {
    let graph = load_graph(graph_path)?;
    let method: Method = method.parse()?;
    if !graph.is_acyclic() {
        return Err(Error::Cyclic.into());
    }
    let n = graph.n() as u64;
    let (rep, bound_note) = match method {
        Method::ClosedForm => {
            let (form, rep) = closed_form_for(&graph)?;
            let note = match form {
                ClosedForm::SourceArcPath => format!("source-arc-path DIN = {}", bounds::source_arc_path_din(n)?),
                ClosedForm::Augmented => format!("augmented DIN = {}", bounds::augmented_din(n)?),
            };
            (rep, note)
        }
        Method::Pairing | Method::Inductive => {
            let rep = construct::construct(&graph, method)?;
            let note = match (method, bounds::lemma_upper_bound(n)) {
                (Method::Pairing, Ok(lemma)) => format!("pairing bound = {lemma}"),
                _ if n >= 2 => format!("general bound = {}", bounds::general_upper_bound(n)?),
                _ => "no bound at n = 1".to_string(),
            };
            (rep, note)
        }
    };
    write_output(out, &(rep.to_json() + "\n"))?;
    eprintln!("method = {method}");
    eprintln!("palette_size = {}", rep.palette_size());
    eprintln!("{bound_note}");
    if n >= 2 && n % 2 == 1 && method != Method::ClosedForm {
        let floored = bounds::general_upper_bound(n)?;
        if rep.palette_size() as u64 > floored {
            eprintln!("note: palette_size exceeds the floored formula value {floored} (odd n is not covered by the construction's guarantee)");
        }
    }
    Ok(0)
}

fn cmd_din(graph: &Digraph, options: SolveOptions, witness_path: Option<&str>, json: bool) -> Result<u8, Failure> {
    let result = exact_din(graph, &options);
    if let (Some(path), Some(witness)) = (witness_path, &result.witness) {
        write_output(path, &(witness.to_json() + "\n"))?;
    }
    let code = match result.status {
        SolveStatus::Optimal { .. } => 0,
        SolveStatus::Infeasible => EXIT_CYCLIC,
        SolveStatus::BudgetExhausted { .. } => EXIT_BUDGET,
    };
    if json {
        let (status, din, best_upper) = match result.status {
            SolveStatus::Optimal { din } => ("optimal", Some(din), None),
            SolveStatus::Infeasible => ("infeasible", None, None),
            SolveStatus::BudgetExhausted { best_upper } => ("budget_exhausted", None, best_upper),
        };
        let report = json!({
            "status": status,
            "din": din,
            "best_upper": best_upper,
            "nodes_explored": result.nodes_explored,
            "elapsed_ms": result.elapsed.as_secs_f64() * 1e3,
            "witness": result.witness,
        });
        println!("{report}");
        return Ok(code);
    }
    match result.status {
        SolveStatus::Optimal { din } => println!("DIN = {din}"),
        SolveStatus::Infeasible => println!("INFEASIBLE (cyclic)"),
        SolveStatus::BudgetExhausted { best_upper: Some(upper) } => {
            println!("UNKNOWN (budget) best upper bound = {upper}")
        }
        SolveStatus::BudgetExhausted { best_upper: None } => println!("UNKNOWN (budget)"),
    }
    if let (Some(path), Some(_)) = (witness_path, &result.witness) {
        if path != "-" {
            println!("witness: {path}");
        }
    }
    println!("nodes = {}", result.nodes_explored);
    Ok(code)
}

fn cmd_bound(n: u64, formula: Option<&str>, p: Option<u64>) -> Result<u8, Failure> {
    match formula {
        Some("p-intersection") => {
            let p = p.ok_or_else(|| usage("--formula p-intersection needs --p"))?;
            println!("{}", bounds::p_intersection_upper_bound(n, p)?);
        }
        Some(name) => {
            let formula = Formula::from_name(name).ok_or_else(|| usage(format!("unknown formula {name:?}")))?;
            println!("{}", formula.eval(n)?);
        }
        None => {
            // The general bound's domain covers every other formula's.
            bounds::general_upper_bound(n)?;
            for (formula, value) in bounds::applicable(n) {
                println!("{} {value}", formula.name());
            }
        }
    }
    Ok(0)
}
