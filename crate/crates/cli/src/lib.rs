//! Library side of the `propeller` command-line tool: graph file formats,
//! budgets, the JSON run report and the command implementations.
//!
//! Exit codes: 0 member or success, 1 non-member, 2 error, 3 budget cap.

pub mod budget;
pub mod commands;
pub mod format;
pub mod report;

pub use format::{parse_graph, Format, ParseError, ParsedGraph};
pub use report::{Outcome, RunReport};
