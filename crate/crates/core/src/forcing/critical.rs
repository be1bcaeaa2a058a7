//! Critical and uncritical vertices.
//!
//! The definitional mode enumerates every optimal zero forcing set and every
//! complete standard forcing process from it. A vertex's role in a process
//! (length-0 chain, source, terminal, interior) depends only on the initial
//! set and the set of vertices that force, so processes are deduplicated by
//! that pair; quantifying over forcing orders or chain partitions instead
//! gives the same answers.

use super::{zf_number, ForcingRule, Kernel, Target};
use crate::bitset::{subsets_of_size, VertexSet};
use crate::error::{cap, Error, Result};
use crate::graph::Graph;
use crate::util::WordSet;

pub const DEFINITIONAL_MAX_VERTICES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// Some optimal process leaves it in a chain by itself.
    Critical,
    /// Every optimal process makes it a source or terminal of a longer chain.
    Uncritical,
    Neither,
}

/// Definitional classification of every vertex.
pub fn classify_all(g: &Graph) -> Result<Vec<VertexClass>> {
    cap(
        "definitional classification vertex count",
        DEFINITIONAL_MAX_VERTICES,
        g.n(),
    )?;
    let k = Kernel::new(Target::Graph(g));
    let z = zf_number(ForcingRule::Standard, g)?.number;
    let mut ever_alone = 0u64;
    let mut ever_interior = 0u64;
    for f in subsets_of_size(g.vertices(), z) {
        if k.close(ForcingRule::Standard, f.0, k.full) != k.full {
            continue;
        }
        let mut seen: WordSet<(u64, u64)> = WordSet::default();
        let mut stack = vec![(f.0, 0u64)];
        seen.insert((f.0, 0));
        while let Some((filled, forcers)) = stack.pop() {
            if filled == k.full {
                ever_alone |= f.0 & !forcers;
                ever_interior |= forcers & !f.0;
                continue;
            }
            for force in k.legal_forces(ForcingRule::Standard, filled, k.full) {
                let next = (filled | 1 << force.forced, forcers | 1 << force.forcer);
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
    Ok((0..g.n())
        .map(|v| {
            if ever_alone >> v & 1 == 1 {
                VertexClass::Critical
            } else if ever_interior >> v & 1 == 0 {
                VertexClass::Uncritical
            } else {
                VertexClass::Neither
            }
        })
        .collect())
}

pub fn classify_vertex(g: &Graph, z: usize) -> Result<VertexClass> {
    if z >= g.n() {
        return Err(Error::VertexOutOfRange(z));
    }
    Ok(classify_all(g)?[z])
}

/// Critical iff deleting the vertex lowers `Z` by one (the empty graph has
/// `Z = 0`).
pub fn is_critical_fast(g: &Graph, z: usize) -> Result<bool> {
    if z >= g.n() {
        return Err(Error::VertexOutOfRange(z));
    }
    let zg = zf_number(ForcingRule::Standard, g)?.number;
    if g.n() == 1 {
        return Ok(zg == 1);
    }
    let zh = zf_number(ForcingRule::Standard, &g.without_vertex(z)?)?.number;
    Ok(zh + 1 == zg)
}

/// The clique `T = N[z]` when `N[z]` is a clique, which is exactly the case
/// where some clique `T ∋ z` has `deg(z) = |T| - 1`.
fn simplicial_clique(g: &Graph, z: usize) -> Option<VertexSet> {
    let t = g.neighbors(z) | VertexSet::singleton(z);
    g.is_clique(t).then_some(t)
}

fn tight_vertices(g: &Graph, t: VertexSet) -> VertexSet {
    t.iter().filter(|&v| g.degree(v) + 1 == t.len()).collect()
}

/// Hypotheses of the degree condition for criticality: with `T = N[z]` a
/// clique, another vertex of `T` has degree `|T| - 1`, some vertex of `T` has
/// a neighbor outside `T`, and each vertex's outside neighborhood is empty
/// or a clique.
pub fn deg_critical_hypotheses(g: &Graph, z: usize) -> bool {
    let Some(t) = simplicial_clique(g, z) else {
        return false;
    };
    let outside = |v: usize| g.neighbors(v) - t;
    tight_vertices(g, t).len() >= 2
        && t.iter().any(|v| !outside(v).is_empty())
        && t.iter().all(|v| g.is_clique(outside(v)))
}

/// Hypotheses of the degree condition for uncriticality: with `T = N[z]` a
/// clique and `deg(z) = |T| - 1 ≥ 1`, `z` is the only such vertex of `T` and
/// `V ∖ T` is a clique.
pub fn deg_uncritical_hypotheses(g: &Graph, z: usize) -> bool {
    let Some(t) = simplicial_clique(g, z) else {
        return false;
    };
    t.len() >= 2 && tight_vertices(g, t) == VertexSet::singleton(z) && g.is_clique(g.vertices() - t)
}
