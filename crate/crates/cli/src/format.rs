//! Graph file formats: labeled edge lists, graph6 and DIMACS.

use std::collections::{HashMap, HashSet};
use std::path::Path;

use propeller_core::Graph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    /// One `u v` pair per line; labels are arbitrary tokens.
    EdgeList,
    Graph6,
    /// `p edge n m` header followed by `e u v` lines, 1-based.
    Dimacs,
}

impl Format {
    /// Guesses the format from a file extension; edge list otherwise.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => Format::Graph6,
            Some("dimacs" | "col" | "dim") => Format::Dimacs,
            _ => Format::EdgeList,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("byte {offset}: {message}")]
    Byte { offset: usize, message: String },
    #[error("{0}")]
    Other(String),
}

/// A parsed graph with the input label of every node id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl ParsedGraph {
    /// Node ids labeled `0..n`.
    pub fn unlabeled(graph: Graph) -> ParsedGraph {
        let labels = graph.nodes().map(|v| v.to_string()).collect();
        ParsedGraph { graph, labels }
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<ParsedGraph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(bytes),
        Format::Graph6 => parse_graph6(bytes),
        Format::Dimacs => parse_dimacs(bytes),
    }
}

fn text(bytes: &[u8]) -> Result<&str, ParseError> {
    std::str::from_utf8(bytes)
        .map_err(|e| ParseError::Byte { offset: e.valid_up_to(), message: "invalid UTF-8".into() })
}

/// Rejects self-loops and repeated edges, reporting the offending line.
struct EdgeCollector {
    seen: HashSet<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl EdgeCollector {
    fn new() -> Self {
        EdgeCollector { seen: HashSet::new(), edges: Vec::new() }
    }

    fn add(&mut self, line: usize, u: usize, v: usize) -> Result<(), ParseError> {
        if u == v {
            return Err(ParseError::Line { line, message: "self-loop".into() });
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::Line { line, message: "duplicate edge".into() });
        }
        self.edges.push((u, v));
        Ok(())
    }
}

/// Lines hold `u v` (an edge) or a single label (an isolated node); blank
/// lines and `#` comments are skipped. Ids follow first appearance.
fn parse_edge_list(bytes: &[u8]) -> Result<ParsedGraph, ParseError> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut collector = EdgeCollector::new();
    let mut id_of = |label: &str| {
        *ids.entry(label.to_string()).or_insert_with(|| {
            labels.push(label.to_string());
            labels.len() - 1
        })
    };
    for (i, raw) in text(bytes)?.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [a] => {
                id_of(a);
            }
            [a, b] => {
                let (u, v) = (id_of(a), id_of(b));
                collector.add(i + 1, u, v)?;
            }
            _ => {
                return Err(ParseError::Line {
                    line: i + 1,
                    message: format!("expected `u v`, found {} tokens", tokens.len()),
                })
            }
        }
    }
    let graph = Graph::from_edges(labels.len(), collector.edges).map_err(|e| ParseError::Other(e.to_string()))?;
    Ok(ParsedGraph { graph, labels })
}

fn parse_graph6(bytes: &[u8]) -> Result<ParsedGraph, ParseError> {
    let mut data = bytes;
    let mut offset = 0;
    const HEADER: &[u8] = b">>graph6<<";
    if data.starts_with(HEADER) {
        data = &data[HEADER.len()..];
        offset = HEADER.len();
    }
    let end = data.iter().rposition(|b| !b.is_ascii_whitespace()).map_or(0, |p| p + 1);
    let data = &data[..end];
    if data.is_empty() {
        return Err(ParseError::Byte { offset, message: "empty graph6 input".into() });
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::Byte { offset: offset + i, message: format!("byte {b} outside the graph6 range") });
        }
    }
    let six = |i: usize| (data[i] - 63) as usize;
    let need = |len: usize| {
        if data.len() < len {
            Err(ParseError::Byte { offset: offset + data.len(), message: "truncated node count".into() })
        } else {
            Ok(())
        }
    };
    let (n, start) = if data[0] != 126 {
        (six(0), 1)
    } else if data.len() > 1 && data[1] != 126 {
        need(4)?;
        ((six(1) << 12) | (six(2) << 6) | six(3), 4)
    } else {
        need(8)?;
        ((2..8).fold(0, |acc, i| (acc << 6) | six(i)), 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &data[start..];
    if body.len() != expected {
        return Err(ParseError::Byte {
            offset: offset + start,
            message: format!("expected {expected} adjacency bytes for {n} nodes, found {}", body.len()),
        });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(ParseError::Byte { offset: offset + start + expected - 1, message: "nonzero padding bits".into() });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| ParseError::Other(e.to_string()))?;
    Ok(ParsedGraph::unlabeled(graph))
}

fn parse_dimacs(bytes: &[u8]) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut collector = EdgeCollector::new();
    let mut last_line = 0;
    for (i, raw) in text(bytes)?.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let number = |t: &str| {
            t.parse::<usize>().map_err(|_| ParseError::Line { line, message: format!("`{t}` is not a number") })
        };
        match tokens.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["p", kind, n, m] => {
                if header.is_some() {
                    return Err(ParseError::Line { line, message: "second problem line".into() });
                }
                if !matches!(*kind, "edge" | "col") {
                    return Err(ParseError::Line { line, message: format!("unsupported problem kind `{kind}`") });
                }
                header = Some((number(n)?, number(m)?));
            }
            ["e", u, v] => {
                let Some((n, _)) = header else {
                    return Err(ParseError::Line { line, message: "edge before the problem line".into() });
                };
                let (u, v) = (number(u)?, number(v)?);
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(ParseError::Line { line, message: format!("node {x} outside 1..={n}") });
                    }
                }
                collector.add(line, u - 1, v - 1)?;
            }
            _ => return Err(ParseError::Line { line, message: format!("unrecognized line `{}`", raw.trim()) }),
        }
    }
    let Some((n, m)) = header else {
        return Err(ParseError::Line { line: last_line.max(1), message: "missing `p edge n m` line".into() });
    };
    if collector.edges.len() != m {
        return Err(ParseError::Line {
            line: last_line.max(1),
            message: format!("header announces {m} edges, found {}", collector.edges.len()),
        });
    }
    let graph = Graph::from_edges(n, collector.edges).map_err(|e| ParseError::Other(e.to_string()))?;
    Ok(ParsedGraph { graph, labels: (1..=n).map(|v| v.to_string()).collect() })
}

/// Serializes `g` in `format`. Edge lists use `labels` when given and list
/// isolated nodes on their own line.
pub fn write_graph(g: &Graph, labels: Option<&[String]>, format: Format) -> String {
    match format {
        Format::EdgeList => {
            let name = |v: usize| labels.map_or_else(|| v.to_string(), |l| l[v].clone());
            let mut out = String::new();
            for v in g.nodes().filter(|&v| g.degree(v) == 0) {
                out.push_str(&format!("{}\n", name(v)));
            }
            for (u, v) in g.edges() {
                out.push_str(&format!("{} {}\n", name(u), name(v)));
            }
            out
        }
        Format::Graph6 => format!("{}\n", to_graph6(g)),
        Format::Dimacs => {
            let mut out = format!("p edge {} {}\n", g.node_count(), g.edge_count());
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
            out
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.node_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend([30, 24, 18, 12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
