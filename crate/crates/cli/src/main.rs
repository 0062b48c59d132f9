use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::mpsc;

use clap::{Args, Parser, Subcommand};
use propeller_cli::budget::{resolve_budget, BUDGET_ENV};
use propeller_cli::commands::{
    generate, run_graph_command, value_name, Class, ColorMode, DecomposePipeline, GenerateKind, GenerateParams,
    GraphCommand, Options, OracleQuery,
};
use propeller_cli::report::InputDescriptor;
use propeller_cli::{parse_graph, Format, Outcome, ParsedGraph, RunReport};
use rayon::prelude::*;

/// Recognize, decompose and color graphs without propellers (a chordless
/// cycle plus a node with two or more neighbors on it).
///
/// Reports are JSON on standard output; a summary goes to standard error.
/// Exit codes: 0 member/success, 1 non-member, 2 error, 3 budget cap.
#[derive(Parser)]
#[command(name = "propeller", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Input format; inferred from the file extension by default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Attach a certificate to negative verdicts.
    #[arg(long, global = true)]
    witness: bool,
    /// Attach the decomposition tree.
    #[arg(long, global = true)]
    tree: bool,
    /// Enumeration caps, e.g. `max_nodes=40,max_cycles=100000,time_ms=5000`.
    /// Overrides the PROPELLER_BUDGET environment variable.
    #[arg(long, global = true)]
    budget: Option<String>,
    /// File listing one input path per line; reports stream as JSON lines.
    #[arg(long, global = true)]
    batch: Option<PathBuf>,
    /// Color without checking membership first.
    #[arg(long, global = true)]
    unchecked: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership in a graph class.
    Recognize {
        #[arg(value_enum)]
        class: Class,
        /// Graph file, or `-` for standard input.
        input: Option<PathBuf>,
    },
    /// Color the vertices with 3 colors or the edges with Δ colors.
    Color {
        #[arg(value_enum)]
        mode: ColorMode,
        input: Option<PathBuf>,
    },
    /// Brute-force reference answers.
    Oracle {
        #[arg(value_enum)]
        query: OracleQuery,
        input: Option<PathBuf>,
    },
    /// Print a decomposition tree.
    Decompose {
        #[arg(value_enum)]
        pipeline: DecomposePipeline,
        input: Option<PathBuf>,
    },
    /// Generate a graph.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: GenerateKind,
    /// Random seed; required for every kind except np-gadget.
    #[arg(long)]
    seed: Option<u64>,
    /// Node count (c0, random) or node bound (glue-s2, glue-i).
    #[arg(long)]
    nodes: Option<usize>,
    /// Edge count for random graphs.
    #[arg(long)]
    edges: Option<usize>,
    /// Extra chords added to each gluing side.
    #[arg(long, default_value_t = 0)]
    extra_chords: usize,
    /// Gadget endpoints as host labels.
    #[arg(long, num_args = 2, value_names = ["X", "Y"])]
    pair: Option<Vec<String>>,
    /// Write the graph to this file in the output format.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Format of the written graph.
    #[arg(long, value_enum, default_value = "edge-list")]
    output_format: Format,
    /// Host graph for np-gadget.
    input: Option<PathBuf>,
}

fn source_name(input: Option<&Path>) -> String {
    input.map_or_else(|| "-".to_string(), |p| p.display().to_string())
}

fn load(input: Option<&Path>, format: Option<Format>) -> Result<(ParsedGraph, InputDescriptor), String> {
    let source = source_name(input);
    let (bytes, format) = match input.filter(|p| p.as_os_str() != "-") {
        Some(path) => {
            let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
            (bytes, format.unwrap_or_else(|| Format::from_path(path)))
        }
        None => {
            let mut bytes = Vec::new();
            std::io::stdin().read_to_end(&mut bytes).map_err(|e| format!("standard input: {e}"))?;
            (bytes, format.unwrap_or(Format::EdgeList))
        }
    };
    let parsed = parse_graph(&bytes, format).map_err(|e| format!("{source}: {e}"))?;
    let descriptor = InputDescriptor::new(&source, format, &parsed);
    Ok((parsed, descriptor))
}

fn run_one(cmd: GraphCommand, input: Option<&Path>, format: Option<Format>, opts: &Options) -> RunReport {
    match load(input, format) {
        Ok((parsed, d)) => run_graph_command(cmd, &parsed, &d.source, d.format, opts),
        Err(e) => RunReport::failed(cmd.name(), None, e),
    }
}

fn emit(report: &RunReport, pretty: bool) {
    let json = if pretty { serde_json::to_string_pretty(report) } else { serde_json::to_string(report) };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", json.expect("reports serialize"));
    let _ = out.flush();
    eprintln!("{}", report.summary());
}

/// Runs every listed input on the thread pool and prints reports in list
/// order as they become available. Returns the most severe outcome.
fn run_batch(cmd: GraphCommand, list: &Path, format: Option<Format>, opts: &Options) -> Result<Outcome, String> {
    let text = std::fs::read_to_string(list).map_err(|e| format!("{}: {e}", list.display()))?;
    let base = list.parent().unwrap_or(Path::new(""));
    let paths: Vec<PathBuf> =
        text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(|l| base.join(l)).collect();
    let (tx, rx) = mpsc::channel();
    let mut worst = Outcome::Member;
    std::thread::scope(|s| {
        s.spawn(|| {
            paths.par_iter().enumerate().for_each_with(tx, |tx, (i, p)| {
                let _ = tx.send((i, run_one(cmd, Some(p), format, opts)));
            });
        });
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (i, report) in rx {
            pending.insert(i, report);
            while let Some(report) = pending.remove(&next) {
                if report.outcome.severity() > worst.severity() {
                    worst = report.outcome;
                }
                emit(&report, false);
                next += 1;
            }
        }
    });
    Ok(worst)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let env = std::env::var(BUDGET_ENV).ok();
    let budget = match resolve_budget(g.budget.as_deref(), env.as_deref()) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = Options { witness: g.witness, tree: g.tree, unchecked: g.unchecked, budget };
    let (cmd, input) = match &cli.command {
        Command::Recognize { class, input } => (GraphCommand::Recognize(*class), input),
        Command::Color { mode, input } => (GraphCommand::Color(*mode), input),
        Command::Oracle { query, input } => (GraphCommand::Oracle(*query), input),
        Command::Decompose { pipeline, input } => (GraphCommand::Decompose(*pipeline), input),
        Command::Generate(args) => return run_generate(args, g),
    };
    let code = match &g.batch {
        Some(list) => {
            if input.is_some() {
                eprintln!("error: --batch replaces the input argument");
                return ExitCode::from(2);
            }
            match run_batch(cmd, list, g.format, &opts) {
                Ok(worst) => worst.exit_code(),
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        None => {
            let report = run_one(cmd, input.as_deref(), g.format, &opts);
            emit(&report, true);
            report.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn run_generate(args: &GenerateArgs, g: &Global) -> ExitCode {
    if g.batch.is_some() {
        eprintln!("error: generate does not take --batch");
        return ExitCode::from(2);
    }
    let params = GenerateParams {
        kind: args.kind,
        seed: args.seed,
        nodes: args.nodes,
        edges: args.edges,
        extra_chords: args.extra_chords,
        pair: args.pair.as_ref().map(|p| (p[0].clone(), p[1].clone())),
        format: args.output_format,
    };
    let host = match (&args.input, args.kind) {
        (None, GenerateKind::NpGadget) => Some(load(None, g.format)),
        (None, _) => None,
        (Some(path), _) => Some(load(Some(path), g.format)),
    };
    let mut report = match host {
        Some(Err(e)) => RunReport::failed(format!("generate {}", value_name(args.kind)), None, e),
        Some(Ok((parsed, d))) => generate(&params, Some((&parsed, d))),
        None => generate(&params, None),
    };
    if let (Some(path), Some(payload)) = (&args.output, report.graph.as_mut()) {
        let text =
            if payload.encoded.ends_with('\n') { payload.encoded.clone() } else { format!("{}\n", payload.encoded) };
        match std::fs::write(path, text) {
            Ok(()) => payload.written_to = Some(path.display().to_string()),
            Err(e) => {
                report =
                    RunReport::failed(report.command.clone(), report.input.clone(), format!("{}: {e}", path.display()))
            }
        }
    }
    emit(&report, true);
    ExitCode::from(report.exit_code() as u8)
}
