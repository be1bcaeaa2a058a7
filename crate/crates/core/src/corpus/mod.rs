//! Reference instances with their known parameter values.

pub mod figures;

use crate::bitset::VertexSet;
use crate::cobipartite::{gf2_max_nullity, gf2_pattern_rank};
use crate::error::{Error, Result};
use crate::forcing::{
    classify_all, closure, direct_zf_number, enhanced_zf_number, immutable_triangle_check,
    min_force_between, persistent_triangle_check, zf_number, ForcingRule, VertexClass,
};
use crate::graph::{
    hadwiger_number, is_linear_ktree, ktree_recognize, treewidth_exact, CliquePartition, Graph,
};
use crate::pattern::{tri_number, Pattern};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Eq(i64),
    AtLeast(i64),
    Below(i64),
    Flag(bool),
    /// The computed vertex set must contain these (0-based) vertices.
    Includes(VertexSet),
}

impl Expected {
    pub fn accepts(&self, got: &Computed) -> bool {
        match (self, got) {
            (Expected::Eq(e), Computed::Int(g)) => g == e,
            (Expected::AtLeast(e), Computed::Int(g)) => g >= e,
            (Expected::Below(e), Computed::Int(g)) => g < e,
            (Expected::Flag(e), Computed::Flag(g)) => g == e,
            (Expected::Includes(e), Computed::Set(g)) => e.is_subset(*g),
            _ => false,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Eq(v) => write!(f, "{v}"),
            Expected::AtLeast(v) => write!(f, ">= {v}"),
            Expected::Below(v) => write!(f, "< {v}"),
            Expected::Flag(v) => write!(f, "{v}"),
            Expected::Includes(s) => write!(f, "includes {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Computed {
    Int(i64),
    Flag(bool),
    Set(VertexSet),
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Computed::Int(v) => write!(f, "{v}"),
            Computed::Flag(v) => write!(f, "{v}"),
            Computed::Set(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub graph: Option<Graph>,
    pub pattern: Option<Pattern>,
    pub partition: Option<CliquePartition>,
    /// `(R, C)` for the triangle checks.
    pub triangle: Option<(VertexSet, VertexSet)>,
    /// Initial set for the `forcing_set` check.
    pub initial: Option<VertexSet>,
    pub expected: BTreeMap<&'static str, Expected>,
    /// Where the values come from, in a few words.
    pub anchor: &'static str,
    /// Values recorded for reference but not computable here.
    pub metadata: Vec<(&'static str, &'static str)>,
}

impl CorpusEntry {
    fn new(name: &'static str, anchor: &'static str) -> Self {
        CorpusEntry {
            name,
            graph: None,
            pattern: None,
            partition: None,
            triangle: None,
            initial: None,
            expected: BTreeMap::new(),
            anchor,
            metadata: Vec::new(),
        }
    }

    fn graph(mut self, g: Graph) -> Self {
        self.graph = Some(g);
        self
    }

    fn pattern(mut self, y: Pattern) -> Self {
        self.pattern = Some(y);
        self
    }

    fn partition(mut self, v1: &[usize], v2: &[usize]) -> Self {
        self.partition = Some(CliquePartition::from_labels(v1, v2));
        self
    }

    fn triangle(mut self, r: &[usize], c: &[usize]) -> Self {
        self.triangle = Some((VertexSet::from_labels(r), VertexSet::from_labels(c)));
        self
    }

    fn expect(mut self, param: &'static str, e: Expected) -> Self {
        self.expected.insert(param, e);
        self
    }

    fn eq(self, params: &[&'static str], v: i64) -> Self {
        params
            .iter()
            .fold(self, |s, p| s.expect(p, Expected::Eq(v)))
    }

    fn no_graph(&self) -> Error {
        Error::InvalidGraph(format!("corpus entry {} has no graph", self.name))
    }

    fn g(&self) -> Result<&Graph> {
        self.graph.as_ref().ok_or_else(|| self.no_graph())
    }

    fn partition_or_first(&self) -> Result<CliquePartition> {
        if let Some(p) = self.partition {
            return Ok(p);
        }
        self.g()?
            .clique_partitions()
            .first()
            .copied()
            .ok_or_else(|| Error::InvalidPartition(format!("{} is not cobipartite", self.name)))
    }

    /// Computes one parameter of this entry.
    pub fn compute(&self, param: &str) -> Result<Computed> {
        use Computed::*;
        let int = |v: usize| Ok(Int(v as i64));
        match param {
            "z" => int(zf_number(ForcingRule::Standard, self.g()?)?.number),
            "zplus" => int(zf_number(ForcingRule::Psd, self.g()?)?.number),
            "zhat" => int(enhanced_zf_number(self.g()?)?.number),
            "zd" => int(direct_zf_number(self.g()?)?.number),
            "tw" => int(treewidth_exact(self.g()?)?),
            "h" => int(hadwiger_number(self.g()?)?),
            "gf2_nullity" => int(gf2_max_nullity(self.g()?)?),
            "min_force_between" => {
                let p = self.partition_or_first()?;
                int(min_force_between(self.g()?, p.v1, p.v2)?.number)
            }
            "k1" | "k2" => {
                let p = self.partition_or_first()?;
                let (u1, u2) = self.g()?.unsaturated_vertices(&p);
                int(if param == "k1" { u1.len() } else { u2.len() })
            }
            "ktree_k" => int(ktree_recognize(self.g()?).ok_or_else(|| self.no_ktree())?),
            "linear_ktree" => {
                let g = self.g()?;
                Ok(Flag(
                    ktree_recognize(g).is_some_and(|k| is_linear_ktree(g, k)),
                ))
            }
            "persistent" | "immutable" => {
                let (r, c) = self.triangle.ok_or_else(|| self.no_graph())?;
                let check = if param == "persistent" {
                    persistent_triangle_check
                } else {
                    immutable_triangle_check
                };
                Ok(Flag(check(self.g()?, r, c)?))
            }
            "forcing_set" => {
                let g = self.g()?;
                let f = self.initial.ok_or_else(|| self.no_graph())?;
                Ok(Flag(closure(ForcingRule::Standard, g, f) == g.vertices()))
            }
            "critical_vertices" => {
                let classes = classify_all(self.g()?)?;
                Ok(Set(classes
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c == VertexClass::Critical)
                    .map(|(v, _)| v)
                    .collect()))
            }
            "tri" => int(tri_number(self.y()?)),
            "gf2rank" => int(gf2_pattern_rank(self.y()?)),
            other => Err(Error::Parse(format!("unknown corpus parameter {other}"))),
        }
    }

    fn y(&self) -> Result<&Pattern> {
        self.pattern
            .as_ref()
            .ok_or_else(|| Error::Parse(format!("corpus entry {} has no pattern", self.name)))
    }

    fn no_ktree(&self) -> Error {
        Error::InvalidGraph(format!("{} is not a k-tree", self.name))
    }
}

/// All reference entries. Vertex labels in comments and anchors are 1-based.
pub fn corpus_entries() -> Vec<CorpusEntry> {
    use figures::*;
    let mut fig1_entry = CorpusEntry::new("fig1", "persistent triangle in a 7-vertex graph")
        .graph(fig1())
        .triangle(&[1, 2, 3], &[3, 4, 5])
        .expect("persistent", Expected::Flag(true))
        .expect("forcing_set", Expected::Flag(true));
    fig1_entry.initial = Some(VertexSet::from_labels(&[1, 2, 6, 7]));
    let pentasun_nullity = Expected::Eq(2);
    vec![
        fig1_entry,
        CorpusEntry::new("fig2_g1", "directly forceable graph, immutable triangle")
            .graph(fig2_g1())
            .triangle(&[1, 2, 3], &[4, 5, 6])
            .eq(&["z", "zd"], 3)
            .expect("immutable", Expected::Flag(true)),
        CorpusEntry::new(
            "fig2_g2",
            "cobipartite graph sharing the pattern of fig2_g1",
        )
        .graph(fig2_g2())
        .pattern(fig2_pattern())
        .partition(&[1, 2, 3], &[4, 5, 6])
        .triangle(&[1, 2, 3], &[4, 5, 6])
        .eq(&["z", "zd", "tri"], 3)
        .expect("immutable", Expected::Flag(true)),
        CorpusEntry::new("fig3", "unsaturated cobipartite graph")
            .graph(fig3())
            .partition(&[1, 2, 3], &[4, 5, 6])
            .eq(&["z"], 3)
            .eq(&["min_force_between"], 5),
        CorpusEntry::new("fig4", "saturated 3 x 3 instance and linear 3-tree")
            .graph(fig4())
            .pattern(fig4_pattern())
            .eq(&["tri", "z", "ktree_k", "tw"], 3)
            .eq(&["h"], 4)
            .expect("linear_ktree", Expected::Flag(true)),
        CorpusEntry::new("fig5", "8 x 7 pattern with a strict nullity gap")
            .graph(fig5())
            .pattern(fig5_pattern())
            .eq(&["tri"], 4)
            .eq(&["z", "zhat", "zplus"], 11)
            .expect("gf2rank", Expected::AtLeast(5))
            .expect("gf2_nullity", Expected::Below(11)),
        {
            let mut e = CorpusEntry::new("fig6", "unsaturated instance with one isolated column")
                .graph(fig6())
                .pattern(fig6_pattern())
                .partition(&[1, 2, 3], &[4, 5, 6, 7])
                .eq(&["k1"], 0)
                .eq(&["k2"], 1)
                .eq(&["z", "tri"], 3)
                .eq(&["gf2_nullity"], 2);
            e.metadata.push(("real maximum nullity", "3"));
            e
        },
        CorpusEntry::new("fig7_h", "treewidth below the forcing numbers")
            .graph(fig7_h())
            .pattern(fig7_pattern())
            .eq(&["tw"], 3)
            .eq(&["z", "zplus", "zhat"], 4)
            .eq(&["tri"], 2),
        CorpusEntry::new("fig8", "critical vertex example")
            .graph(fig8())
            .expect(
                "critical_vertices",
                Expected::Includes(VertexSet::from_labels(&[1])),
            ),
        CorpusEntry::new("pentasun", "enhanced number below the forcing number")
            .graph(pentasun())
            .expect("gf2_nullity", pentasun_nullity.clone())
            .eq(&["z"], 3)
            .eq(&["zhat"], 2),
        CorpusEntry::new(
            "extended_pentasun",
            "enhanced number equal to the forcing number",
        )
        .graph(extended_pentasun())
        .expect("gf2_nullity", pentasun_nullity)
        .eq(&["z", "zhat"], 3),
        {
            let mut e = CorpusEntry::new("heawood_complement", "complement of the Heawood graph")
                .graph(heawood_complement())
                .eq(&["z", "zplus", "zhat"], 11);
            e.metadata.push(("real maximum nullity", "10"));
            e
        },
    ]
}

pub fn lookup(name: &str) -> Option<CorpusEntry> {
    corpus_entries().into_iter().find(|e| e.name == name)
}

#[derive(Clone, Debug)]
pub struct CorpusRow {
    pub entry: &'static str,
    pub param: &'static str,
    pub expected: Expected,
    pub computed: std::result::Result<Computed, Error>,
}

impl CorpusRow {
    pub fn passed(&self) -> bool {
        self.computed
            .as_ref()
            .is_ok_and(|c| self.expected.accepts(c))
    }
}

impl fmt::Display for CorpusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let got = match &self.computed {
            Ok(c) => c.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{:<20} {:<18} {:<14} {:<14} {status}",
            self.entry,
            self.param,
            self.expected.to_string(),
            got
        )
    }
}

/// Computes every expected value of every entry, in entry order.
pub fn run_corpus() -> Vec<CorpusRow> {
    let mut rows = Vec::new();
    for e in corpus_entries() {
        for (param, expected) in &e.expected {
            rows.push(CorpusRow {
                entry: e.name,
                param,
                expected: expected.clone(),
                computed: e.compute(param),
            });
        }
    }
    rows
}
