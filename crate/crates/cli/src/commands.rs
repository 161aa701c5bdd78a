//! `solve` and `gen` subcommands.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use connfactor_core::oracle::brute_force_connected_f_factor;
use connfactor_core::reduction::{generate_family, ReductionParams};
use connfactor_core::solver::{connected_f_factor, min_connected_f_factor};
use connfactor_core::{Outcome, SolveTrace, SolverOptions};

use crate::format::{parse_graph, parse_instance, serialize_instance};

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "connfactor", version, about = "Connected f-factors of undirected graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a connected f-factor of an instance file.
    Solve(SolveArgs),
    /// Turn a graph into connected f-factor instances, one per path through vertex 0.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    pub path: PathBuf,
    /// Minimize total edge weight (the file must be weighted).
    #[arg(long)]
    pub min_weight: bool,
    /// Print a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Cross-check the answer by exhaustive search.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    pub path: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// Clique size; without it the full-size construction is attempted.
    #[arg(long)]
    pub part_size: Option<usize>,
    #[arg(long)]
    pub max_output: Option<usize>,
    /// Output directory.
    #[arg(short = 'o', long = "output", required = true)]
    pub output: PathBuf,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub outcome: &'static str,
    pub edges: Vec<[usize; 2]>,
    pub weight: Option<i64>,
    pub witness_partition: Option<Vec<Vec<usize>>>,
    pub trace: SolveTrace,
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Solve(args) => solve(&args, out, err),
        Command::Gen(args) => gen(&args, out, err),
    }
}

pub fn solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match fs::read_to_string(&args.path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", args.path.display());
            return EXIT_INPUT;
        }
    };
    let inst = match parse_instance(&text) {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", args.path.display());
            return EXIT_INPUT;
        }
    };
    for w in &inst.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let graph = inst.graph;
    let f = inst.f.expect("instance files carry f");
    if args.min_weight && !graph.is_weighted() {
        let _ = writeln!(err, "error: --min-weight needs a weighted file");
        return EXIT_INPUT;
    }
    let options = SolverOptions {
        threads: args.threads.max(1),
    };
    let solved = if args.min_weight {
        min_connected_f_factor(&graph, &f, &options)
    } else {
        connected_f_factor(&graph, &f, &options)
    };
    let solution = match solved {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };

    let weight = match (&solution.outcome, args.min_weight) {
        (Outcome::Found(h), true) => h.weight(&graph).ok(),
        _ => None,
    };
    let code = if solution.is_found() { EXIT_FOUND } else { EXIT_NONE };

    if args.oracle {
        let truth = brute_force_connected_f_factor(&graph, &f);
        let best = truth.best.as_ref().map(|b| b.1);
        let agrees = truth.exists == solution.is_found() && (!args.min_weight || best == weight);
        if !agrees {
            let _ = writeln!(
                err,
                "oracle mismatch: solver found={} weight={weight:?}, oracle exists={} weight={best:?}",
                solution.is_found(),
                truth.exists
            );
            return EXIT_MISMATCH;
        }
    }

    if args.json {
        let report = Report {
            outcome: match solution.outcome {
                Outcome::Found(_) => "found",
                Outcome::PartitionUnconnectable(_) => "none",
                Outcome::NoFFactor => "no-f-factor",
            },
            edges: solution
                .factor()
                .map(|h| h.pairs(&graph).map(|(u, v)| [u, v]).collect())
                .unwrap_or_default(),
            weight,
            witness_partition: solution.witness().map(|q| q.parts().to_vec()),
            trace: solution.trace.clone(),
        };
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        return code;
    }

    match &solution.outcome {
        Outcome::Found(h) => {
            let _ = writeln!(out, "FOUND");
            for (u, v) in h.pairs(&graph) {
                let _ = writeln!(out, "e {u} {v}");
            }
            if let Some(w) = weight {
                let _ = writeln!(out, "weight {w}");
            }
        }
        Outcome::PartitionUnconnectable(q) => {
            let _ = writeln!(out, "NONE");
            let _ = writeln!(out, "witness {q}");
        }
        Outcome::NoFFactor => {
            let _ = writeln!(out, "NO-F-FACTOR");
        }
    }
    code
}

pub fn gen(args: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let inst = match fs::read_to_string(&args.path)
        .map_err(|e| e.to_string())
        .and_then(|t| parse_graph(&t).map_err(|e| e.to_string()))
    {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", args.path.display());
            return EXIT_INPUT;
        }
    };
    let params = ReductionParams {
        epsilon: args.epsilon,
        part_size_override: args.part_size,
        max_output: args.max_output,
    };
    let family = match generate_family(&inst.graph, &params) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    if let Err(e) = fs::create_dir_all(&args.output) {
        let _ = writeln!(err, "error: {}: {e}", args.output.display());
        return EXIT_INPUT;
    }
    let mut manifest = String::from("c file u0 u1 u2 u3\n");
    let mut written = 0;
    for instance in family {
        let [a, b, c, d] = instance.path;
        let name = format!("inst_{a}_{b}_{c}_{d}.ffactor");
        let body = format!(
            "c path {a} {b} {c} {d}\n{}",
            serialize_instance(&instance.graph, Some(&instance.f))
        );
        if let Err(e) = fs::write(args.output.join(&name), body) {
            let _ = writeln!(err, "error: {name}: {e}");
            return EXIT_INPUT;
        }
        manifest.push_str(&format!("{name} {a} {b} {c} {d}\n"));
        written += 1;
    }
    if let Err(e) = fs::write(args.output.join("manifest.txt"), manifest) {
        let _ = writeln!(err, "error: manifest: {e}");
        return EXIT_INPUT;
    }
    let _ = writeln!(out, "wrote {written} instances to {}", args.output.display());
    EXIT_FOUND
}
