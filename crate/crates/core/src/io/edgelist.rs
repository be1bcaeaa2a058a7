//! Whitespace-separated edge lists with 1-based labels.
//!
//! Lines starting with `#` are comments. An optional line holding a single
//! integer sets the vertex count (needed for isolated trailing vertices);
//! otherwise it is the largest label seen.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: bad integer {s:?}", lineno + 1)))
        };
        match fields.as_slice() {
            [n] if declared.is_none() && edges.is_empty() => declared = Some(num(n)?),
            [u, v] => {
                let (u, v) = (num(u)?, num(v)?);
                if u == 0 || v == 0 {
                    return Err(Error::Parse(format!(
                        "line {}: labels are 1-based",
                        lineno + 1
                    )));
                }
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected `u v` or a vertex count",
                    lineno + 1
                )))
            }
        }
    }
    let max_label = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < max_label => {
            return Err(Error::Parse(format!(
                "label {max_label} exceeds declared vertex count {n}"
            )))
        }
        Some(n) => n,
        None => max_label,
    };
    if n == 0 {
        return Err(Error::Parse("graph has no vertices".into()));
    }
    crate::error::cap("vertex count", crate::graph::MAX_VERTICES, n)?;
    Graph::from_labeled_edges(n, &edges)
}

/// Canonical form: the vertex count, then one `u v` line per edge with
/// `u < v`, sorted.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.labeled_edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
