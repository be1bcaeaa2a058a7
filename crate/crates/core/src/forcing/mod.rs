//! Zero forcing under the standard, positive semidefinite and loop rules.

mod closure;
mod critical;
mod number;
mod sequence;

pub use closure::{closure, forcing_record};
pub use critical::{
    classify_all, classify_vertex, deg_critical_hypotheses, deg_uncritical_hypotheses,
    is_critical_fast, VertexClass, DEFINITIONAL_MAX_VERTICES,
};
pub use number::{
    direct_zf_number, enhanced_zf_number, min_force_between, zf_number, Enhanced, ZfResult,
    ENHANCED_MAX_VERTICES, ZF_MAX_VERTICES,
};
pub use sequence::{
    immutable_triangle_check, largest_immutable_triangle, largest_persistent_triangle,
    persistent_triangle_by_loopings, persistent_triangle_check, reversal, sequence_search,
    strict_psd_after_standard, ForcerConstraint, SequenceConstraints, LOOPING_CHECK_MAX_VERTICES,
};

pub(crate) use closure::Kernel;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, LoopGraph};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForcingRule {
    Standard,
    Psd,
    Loop,
}

/// The graph a rule acts on. Under the loop rule a plain graph is its
/// loopless looping; the standard and psd rules ignore loops.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Graph(&'a Graph),
    Looped(&'a LoopGraph),
}

impl<'a> From<&'a Graph> for Target<'a> {
    fn from(g: &'a Graph) -> Self {
        Target::Graph(g)
    }
}

impl<'a> From<&'a LoopGraph> for Target<'a> {
    fn from(h: &'a LoopGraph) -> Self {
        Target::Looped(h)
    }
}

impl Target<'_> {
    pub fn n(&self) -> usize {
        match self {
            Target::Graph(g) => g.n(),
            Target::Looped(h) => h.n(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
    /// Legal under the psd rule only: the forcer had other unfilled neighbors.
    pub strictly_psd: bool,
}

impl Force {
    pub fn new(forcer: usize, forced: usize) -> Self {
        Force {
            forcer,
            forced,
            strictly_psd: false,
        }
    }
}

/// An initial filled set and the forces applied to it, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingRecord {
    pub initial: VertexSet,
    pub forces: Vec<Force>,
}

impl ForcingRecord {
    pub fn new(initial: VertexSet, forces: Vec<Force>) -> Self {
        ForcingRecord { initial, forces }
    }

    pub fn filled(&self) -> VertexSet {
        self.forces
            .iter()
            .fold(self.initial, |acc, f| acc | VertexSet::singleton(f.forced))
    }

    pub fn is_complete(&self, n: usize) -> bool {
        self.filled() == VertexSet::full(n)
    }

    /// Vertices that force at least once.
    pub fn forcers(&self) -> VertexSet {
        self.forces.iter().map(|f| f.forcer).collect()
    }

    /// Replays the record, checking that every force is legal when applied
    /// and that the psd flags are accurate.
    pub fn validate<'a>(&self, rule: ForcingRule, target: impl Into<Target<'a>>) -> Result<()> {
        let k = Kernel::new(target.into());
        if self.initial.0 & !k.full != 0 {
            return Err(Error::VertexOutOfRange(
                self.initial.iter().last().unwrap_or(0),
            ));
        }
        let mut filled = self.initial.0;
        for (i, f) in self.forces.iter().enumerate() {
            if f.forcer >= k.n || f.forced >= k.n {
                return Err(Error::VertexOutOfRange(f.forcer.max(f.forced)));
            }
            if !k.legal_forces(rule, filled, 1 << f.forcer).contains(f) {
                return Err(Error::Parse(format!(
                    "force {} ({} -> {}) is not legal",
                    i + 1,
                    f.forcer + 1,
                    f.forced + 1
                )));
            }
            filled |= 1 << f.forced;
        }
        Ok(())
    }

    /// Maximal forcing chains, each listed from its first vertex. Defined
    /// when every vertex forces at most once, which always holds under the
    /// standard and loop rules; `None` otherwise. A vertex that forces itself
    /// under the loop rule starts its chain.
    pub fn chains(&self) -> Option<Vec<Vec<usize>>> {
        let mut succ = std::collections::BTreeMap::new();
        let mut has_pred = VertexSet::EMPTY;
        for f in &self.forces {
            if f.forcer != f.forced {
                if succ.insert(f.forcer, f.forced).is_some() {
                    return None;
                }
                has_pred.insert(f.forced);
            }
        }
        let mut out = Vec::new();
        for head in self.filled() - has_pred {
            let mut chain = vec![head];
            let mut v = head;
            while let Some(&u) = succ.get(&v) {
                chain.push(u);
                v = u;
            }
            out.push(chain);
        }
        Some(out)
    }

    /// Trace text: `F = {...}` with 1-based labels, then one `u -> v` line per
    /// force, suffixed with ` psd*` for strictly psd forces.
    pub fn to_trace(&self) -> String {
        let mut s = format!("F = {}\n", self.initial);
        for f in &self.forces {
            let _ = write!(s, "{} -> {}", f.forcer + 1, f.forced + 1);
            if f.strictly_psd {
                s.push_str(" psd*");
            }
            s.push('\n');
        }
        s
    }

    pub fn from_trace(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let head = lines
            .next()
            .ok_or_else(|| Error::Parse("empty trace".into()))?;
        let body = head
            .trim()
            .strip_prefix("F =")
            .map(str::trim)
            .and_then(|b| b.strip_prefix('{'))
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("bad trace header {head:?}")))?;
        let label = |s: &str| -> Result<usize> {
            match s.trim().parse::<usize>() {
                Ok(l) if (1..=crate::graph::MAX_VERTICES).contains(&l) => Ok(l - 1),
                _ => Err(Error::Parse(format!("bad vertex label {s:?}"))),
            }
        };
        let mut initial = VertexSet::EMPTY;
        for part in body.split(',').filter(|p| !p.trim().is_empty()) {
            initial.insert(label(part)?);
        }
        let mut forces = Vec::new();
        for line in lines {
            let (lhs, rest) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("bad force line {line:?}")))?;
            let rest = rest.trim();
            let (rhs, strict) = match rest.strip_suffix("psd*") {
                Some(r) => (r, true),
                None => (rest, false),
            };
            forces.push(Force {
                forcer: label(lhs)?,
                forced: label(rhs)?,
                strictly_psd: strict,
            });
        }
        Ok(ForcingRecord { initial, forces })
    }
}
