//! Instance I/O: graph6, edge lists, pattern grids and generator families.

mod edgelist;
pub mod family;
pub mod generate;
mod graph6;

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};

use crate::error::Result;
use crate::graph::Graph;
use crate::pattern::Pattern;
use std::path::PathBuf;

pub fn parse_pattern(text: &str) -> Result<Pattern> {
    Pattern::parse(text)
}

pub fn emit_pattern(y: &Pattern) -> String {
    y.to_text()
}

/// Where an instance comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSpec {
    Graph6(String),
    EdgeListFile(PathBuf),
    PatternFile(PathBuf),
    Generator {
        name: String,
        seed: u64,
        params: Vec<(String, usize)>,
    },
}

/// A loaded instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Graph(Graph),
    Pattern(Pattern),
}

impl InstanceSpec {
    /// Loads a file- or string-backed instance. Generator specs are expanded
    /// by the callers that know the family's stream shape.
    pub fn load(&self) -> Result<Instance> {
        let read = |p: &PathBuf| {
            std::fs::read_to_string(p)
                .map_err(|e| crate::error::Error::Parse(format!("{}: {e}", p.display())))
        };
        match self {
            InstanceSpec::Graph6(s) => parse_graph6(s).map(Instance::Graph),
            InstanceSpec::EdgeListFile(p) => parse_edge_list(&read(p)?).map(Instance::Graph),
            InstanceSpec::PatternFile(p) => parse_pattern(&read(p)?).map(Instance::Pattern),
            InstanceSpec::Generator { name, .. } => Err(crate::error::Error::Parse(format!(
                "generator `{name}` yields a stream, not a single instance"
            ))),
        }
    }
}
