//! Command implementations. Each returns a [`RunReport`]; I/O stays in the
//! binary.

use std::time::Instant;

use propeller_core::coloring::{edge_color, vertex_3_color};
use propeller_core::cutset::SplitKind;
use propeller_core::generators::{np_gadget, random_c0_graph, random_gluing, random_graph, Seed};
use propeller_core::oracle::{
    find_induced_propeller, oracle_c1, oracle_c2, oracle_chromatic_index, oracle_chromatic_number,
};
use propeller_core::recognition::{
    decompose_chordless, is_chordless, is_critically_2connected, is_in_c0, is_in_c0_prime, is_in_c1_with,
    is_in_c2_with, is_minimally_2connected, preprocess, RecognitionOptions,
};
use propeller_core::{Capped, EnumerationBudget, Graph};

use crate::format::{to_graph6, write_graph, Format, ParsedGraph};
use crate::report::{Coloring, EdgeColor, GraphPayload, InputDescriptor, NodeColor, RunReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Class {
    C0,
    C0prime,
    Chordless,
    C1,
    C2,
    /// Minimally 2-connected.
    Min2c,
    /// Critically 2-connected.
    Crit2c,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ColorMode {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleQuery {
    C1,
    C2,
    ChromaticIndex,
    ChromaticNumber,
    /// Induced propeller whose center has at least four rim neighbors.
    FourPropeller,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DecomposePipeline {
    Chordless,
    C1,
    C2,
    Preprocess,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GenerateKind {
    C0,
    GlueS2,
    GlueI,
    NpGadget,
    Random,
}

/// A command that reads one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphCommand {
    Recognize(Class),
    Color(ColorMode),
    Oracle(OracleQuery),
    Decompose(DecomposePipeline),
}

pub fn value_name(v: impl clap::ValueEnum) -> String {
    v.to_possible_value().map_or_else(String::new, |p| p.get_name().to_string())
}

impl GraphCommand {
    pub fn name(&self) -> String {
        match *self {
            GraphCommand::Recognize(c) => format!("recognize {}", value_name(c)),
            GraphCommand::Color(m) => format!("color {}", value_name(m)),
            GraphCommand::Oracle(q) => format!("oracle {}", value_name(q)),
            GraphCommand::Decompose(p) => format!("decompose {}", value_name(p)),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub witness: bool,
    pub tree: bool,
    pub unchecked: bool,
    pub budget: EnumerationBudget,
}

pub fn run_graph_command(
    cmd: GraphCommand,
    parsed: &ParsedGraph,
    source: &str,
    format: Format,
    opts: &Options,
) -> RunReport {
    let start = Instant::now();
    let report = RunReport::new(cmd.name(), Some(InputDescriptor::new(source, format, parsed)));
    let mut report = match cmd {
        GraphCommand::Recognize(class) => recognize(report, class, parsed, opts),
        GraphCommand::Color(mode) => color(report, mode, parsed, opts),
        GraphCommand::Oracle(query) => oracle(report, query, parsed, opts),
        GraphCommand::Decompose(pipeline) => decompose(report, pipeline, parsed),
    };
    report.elapsed_us = elapsed_us(start);
    report
}

fn elapsed_us(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX)
}

fn recognize(report: RunReport, class: Class, p: &ParsedGraph, opts: &Options) -> RunReport {
    let g = &p.graph;
    let rec = RecognitionOptions { witness: opts.witness, budget: opts.budget };
    match class {
        Class::C0 => report.membership(is_in_c0(g)),
        Class::C0prime => report.membership(is_in_c0_prime(g)),
        Class::Min2c => report.membership(is_minimally_2connected(g)),
        Class::Crit2c => report.membership(is_critically_2connected(g)),
        Class::Chordless => match is_chordless(g) {
            None => {
                let mut report = report.membership(true);
                if opts.tree {
                    report.tree = decompose_chordless(g).ok();
                }
                report
            }
            Some(w) => {
                let mut report = report.membership(false);
                if opts.witness {
                    report.witness = Some(Witness::chord(&w, p));
                }
                report
            }
        },
        Class::C1 | Class::C2 => {
            let (member, tree) = if class == Class::C1 { is_in_c1_with(g, rec) } else { is_in_c2_with(g, rec) };
            let mut report = report.membership(member);
            report.witness = tree.witness.as_ref().map(|w| Witness::propeller(w, p));
            report.witness_note.clone_from(&tree.witness_note);
            if opts.tree {
                report.tree = Some(tree);
            }
            report
        }
    }
}

fn color(report: RunReport, mode: ColorMode, p: &ParsedGraph, opts: &Options) -> RunReport {
    let g = &p.graph;
    let name = report.command.clone();
    let input = report.input.clone();
    if !opts.unchecked && !is_in_c2_with(g, RecognitionOptions::default()).0 {
        let mut failed = RunReport::failed(
            name,
            input,
            "graph contains an induced propeller, so it is outside the colorable class; pass --unchecked to try anyway",
        );
        failed.verdict = Some(false);
        return failed;
    }
    let label = |v: usize| p.label(v).to_string();
    match mode {
        ColorMode::Vertex => match vertex_3_color(g) {
            Ok(c) if c.is_proper(g) => RunReport {
                coloring: Some(Coloring::Vertex {
                    colors_used: c.palette_size(),
                    assignment: g.nodes().map(|v| NodeColor { node: label(v), color: c.color(v) }).collect(),
                }),
                ..report
            },
            Ok(_) => RunReport::failed(name, input, "internal error: coloring is not proper"),
            Err(e) => RunReport::failed(name, input, e),
        },
        ColorMode::Edge => match edge_color(g) {
            Ok(c) if c.is_proper(g) => RunReport {
                coloring: Some(Coloring::Edge {
                    colors_used: c.palette_size(),
                    assignment: c
                        .entries()
                        .iter()
                        .map(|&(u, v, color)| EdgeColor { u: label(u), v: label(v), color })
                        .collect(),
                }),
                ..report
            },
            Ok(_) => RunReport::failed(name, input, "internal error: coloring is not proper"),
            Err(e) => RunReport::failed(name, input, e),
        },
    }
}

fn oracle(report: RunReport, query: OracleQuery, p: &ParsedGraph, opts: &Options) -> RunReport {
    let g = &p.graph;
    let b = opts.budget;
    match query {
        OracleQuery::C1 | OracleQuery::C2 => {
            let answer = if query == OracleQuery::C1 { oracle_c1(g, b) } else { oracle_c2(g, b) };
            match answer {
                Capped::Done(member) => report.membership(member),
                Capped::Capped(r) => report.capped(r),
            }
        }
        OracleQuery::ChromaticIndex | OracleQuery::ChromaticNumber => {
            let answer = if query == OracleQuery::ChromaticIndex {
                oracle_chromatic_index(g, b)
            } else {
                oracle_chromatic_number(g, b)
            };
            match answer {
                Capped::Done(v) => RunReport { value: Some(v), ..report },
                Capped::Capped(r) => report.capped(r),
            }
        }
        OracleQuery::FourPropeller => match find_induced_propeller(g, 4, b) {
            Capped::Done(w) => RunReport {
                verdict: Some(w.is_some()),
                witness: w.as_ref().filter(|_| opts.witness).map(|w| Witness::propeller(w, p)),
                ..report
            },
            Capped::Capped(r) => report.capped(r),
        },
    }
}

fn decompose(report: RunReport, pipeline: DecomposePipeline, p: &ParsedGraph) -> RunReport {
    let g = &p.graph;
    let tree = match pipeline {
        DecomposePipeline::Chordless => match decompose_chordless(g) {
            Ok(t) => t,
            Err(e) => return RunReport::failed(report.command, report.input, e),
        },
        DecomposePipeline::C1 => is_in_c1_with(g, RecognitionOptions::default()).1,
        DecomposePipeline::C2 => is_in_c2_with(g, RecognitionOptions::default()).1,
        DecomposePipeline::Preprocess => preprocess(g).report,
    };
    RunReport { verdict: Some(tree.verdict), tree: Some(tree), ..report }
}

/// Parameters of `generate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerateParams {
    pub kind: GenerateKind,
    pub seed: Option<u64>,
    pub nodes: Option<usize>,
    pub edges: Option<usize>,
    pub extra_chords: usize,
    /// Gadget endpoints as host labels; the first valid pair otherwise.
    pub pair: Option<(String, String)>,
    pub format: Format,
}

/// First nonadjacent pair of degree-2 nodes, in id order.
fn first_gadget_pair(h: &Graph) -> Option<(usize, usize)> {
    let deg2: Vec<usize> = h.nodes().filter(|&v| h.degree(v) == 2).collect();
    deg2.iter().flat_map(|&x| deg2.iter().map(move |&y| (x, y))).find(|&(x, y)| x < y && !h.has_edge(x, y))
}

pub fn generate(params: &GenerateParams, host: Option<(&ParsedGraph, InputDescriptor)>) -> RunReport {
    let start = Instant::now();
    let name = format!("generate {}", value_name(params.kind));
    let input = host.as_ref().map(|(_, d)| d.clone());
    let mut report = match generate_graph(params, host.map(|(p, _)| p)) {
        Ok((g, distinguished, hypotheses_hold)) => {
            let mut report = RunReport::new(name, input);
            report.graph = Some(GraphPayload {
                kind: value_name(params.kind),
                seed: params.seed,
                node_count: g.node_count(),
                edges: g.edges().collect(),
                format: params.format,
                encoded: match params.format {
                    Format::Graph6 => to_graph6(&g),
                    f => write_graph(&g, None, f),
                },
                distinguished,
                hypotheses_hold,
                written_to: None,
            });
            report
        }
        Err(e) => RunReport::failed(name, input, e),
    };
    report.elapsed_us = elapsed_us(start);
    report
}

type Generated = (Graph, Option<usize>, Option<bool>);

fn generate_graph(params: &GenerateParams, host: Option<&ParsedGraph>) -> Result<Generated, String> {
    let err = |e: propeller_core::Error| e.to_string();
    if params.kind == GenerateKind::NpGadget {
        let h = host.ok_or("np-gadget needs a host graph as input")?;
        let (x, y) = match &params.pair {
            Some((a, b)) => {
                let find = |l: &str| h.labels.iter().position(|x| x == l).ok_or(format!("no node labeled `{l}`"));
                (find(a)?, find(b)?)
            }
            None => first_gadget_pair(&h.graph).ok_or("host has no nonadjacent pair of degree-2 nodes")?,
        };
        let (g, v) = np_gadget(&h.graph, x, y).map_err(err)?;
        return Ok((g, Some(v), None));
    }
    if host.is_some() {
        return Err(format!("generate {} takes no input graph", value_name(params.kind)));
    }
    let seed = Seed(params.seed.ok_or("--seed is required for random generation")?);
    match params.kind {
        GenerateKind::C0 => Ok((random_c0_graph(params.nodes.unwrap_or(12), seed).map_err(err)?, None, None)),
        GenerateKind::Random => {
            let n = params.nodes.unwrap_or(10);
            let m = params.edges.unwrap_or(n + n / 2);
            Ok((random_graph(n, m, seed).map_err(err)?, None, None))
        }
        GenerateKind::GlueS2 | GenerateKind::GlueI => {
            let kind = if params.kind == GenerateKind::GlueS2 { SplitKind::S2 } else { SplitKind::I };
            let (_, glued) = random_gluing(kind, params.nodes.unwrap_or(24), params.extra_chords, seed).map_err(err)?;
            Ok((glued.graph, None, Some(glued.hypotheses_hold)))
        }
        GenerateKind::NpGadget => unreachable!("handled above"),
    }
}
