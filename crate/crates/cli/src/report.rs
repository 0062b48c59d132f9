//! The JSON report emitted for every command; its schema is documented in
//! `docs/run_report.schema.json`.

use propeller_core::recognition::{ChordWitness, Containment};
use propeller_core::{CapReason, DecompositionReport, PropellerWitness};
use serde::{Deserialize, Serialize};

use crate::format::{Format, ParsedGraph};

pub const SCHEMA_VERSION: u32 = 1;

/// Final status of a run, which fixes the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Member,
    NonMember,
    /// A command without a membership verdict finished.
    Ok,
    Error,
    Capped,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Member | Outcome::Ok => 0,
            Outcome::NonMember => 1,
            Outcome::Error => 2,
            Outcome::Capped => 3,
        }
    }

    /// Rank used to combine batch outcomes: error, then cap, then
    /// non-member, then success.
    pub fn severity(self) -> u8 {
        match self {
            Outcome::Member | Outcome::Ok => 0,
            Outcome::NonMember => 1,
            Outcome::Capped => 2,
            Outcome::Error => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    /// File path, or `-` for standard input.
    pub source: String,
    pub format: Format,
    pub node_count: usize,
    pub edge_count: usize,
    /// Input label of every node id used elsewhere in the report.
    pub labels: Vec<String>,
}

impl InputDescriptor {
    pub fn new(source: &str, format: Format, parsed: &ParsedGraph) -> Self {
        InputDescriptor {
            source: source.to_string(),
            format,
            node_count: parsed.graph.node_count(),
            edge_count: parsed.graph.edge_count(),
            labels: parsed.labels.clone(),
        }
    }
}

/// A certificate of non-membership, in input labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Propeller { rim: Vec<String>, center: String, containment: Containment },
    Chord { chord: [String; 2], cycle: Vec<String> },
}

impl Witness {
    pub fn propeller(w: &PropellerWitness, p: &ParsedGraph) -> Self {
        Witness::Propeller {
            rim: w.rim.nodes().iter().map(|&v| p.label(v).to_string()).collect(),
            center: p.label(w.center).to_string(),
            containment: w.containment,
        }
    }

    pub fn chord(w: &ChordWitness, p: &ParsedGraph) -> Self {
        Witness::Chord {
            chord: [p.label(w.chord.0).to_string(), p.label(w.chord.1).to_string()],
            cycle: w.cycle.nodes().iter().map(|&v| p.label(v).to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeColor {
    pub node: String,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColor {
    pub u: String,
    pub v: String,
    pub color: usize,
}

/// A verified proper coloring, keyed by input labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Coloring {
    Vertex { colors_used: usize, assignment: Vec<NodeColor> },
    Edge { colors_used: usize, assignment: Vec<EdgeColor> },
}

/// A generated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphPayload {
    pub kind: String,
    pub seed: Option<u64>,
    pub node_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub format: Format,
    /// The graph serialized in `format`.
    pub encoded: String,
    /// Gadget center, for np-gadget.
    pub distinguished: Option<usize>,
    /// For gluings: whether the block lemmas decide the class from the sides.
    pub hypotheses_hold: Option<bool>,
    pub written_to: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool_version: String,
    /// Subcommand and argument, e.g. `recognize c1`.
    pub command: String,
    pub input: Option<InputDescriptor>,
    pub outcome: Outcome,
    /// Membership or yes/no answer, when the command has one.
    pub verdict: Option<bool>,
    /// Numeric answer, e.g. a chromatic number.
    pub value: Option<usize>,
    pub cap: Option<CapReason>,
    pub witness: Option<Witness>,
    pub witness_note: Option<String>,
    pub coloring: Option<Coloring>,
    pub tree: Option<DecompositionReport>,
    pub graph: Option<GraphPayload>,
    pub error: Option<String>,
    pub elapsed_us: u64,
}

impl RunReport {
    pub fn new(command: impl Into<String>, input: Option<InputDescriptor>) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            input,
            outcome: Outcome::Ok,
            verdict: None,
            value: None,
            cap: None,
            witness: None,
            witness_note: None,
            coloring: None,
            tree: None,
            graph: None,
            error: None,
            elapsed_us: 0,
        }
    }

    pub fn failed(command: impl Into<String>, input: Option<InputDescriptor>, error: impl ToString) -> Self {
        RunReport { outcome: Outcome::Error, error: Some(error.to_string()), ..RunReport::new(command, input) }
    }

    pub fn membership(mut self, member: bool) -> Self {
        self.verdict = Some(member);
        self.outcome = if member { Outcome::Member } else { Outcome::NonMember };
        self
    }

    pub fn capped(mut self, reason: CapReason) -> Self {
        self.outcome = Outcome::Capped;
        self.cap = Some(reason);
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.outcome.exit_code()
    }

    /// One line for standard error.
    pub fn summary(&self) -> String {
        let source = self.input.as_ref().map_or("", |i| i.source.as_str());
        let mut line = format!("{} {}: ", self.command, source);
        match self.outcome {
            Outcome::Member => line.push_str("member"),
            Outcome::NonMember => line.push_str("not a member"),
            Outcome::Ok => match (self.verdict, self.value) {
                (_, Some(v)) => line.push_str(&v.to_string()),
                (Some(b), _) => line.push_str(if b { "yes" } else { "no" }),
                _ => line.push_str("ok"),
            },
            Outcome::Error => line.push_str(&format!("error: {}", self.error.as_deref().unwrap_or("unknown"))),
            Outcome::Capped => {
                line.push_str(&format!("capped: {}", self.cap.as_ref().map_or(String::new(), |c| c.to_string())))
            }
        }
        line
    }
}
