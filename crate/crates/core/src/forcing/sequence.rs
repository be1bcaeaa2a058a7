use super::{Force, ForcingRecord, ForcingRule, Kernel, Target};
use crate::bitset::{subsets_of_size, VertexSet};
use crate::error::{cap, Error, Result};
use crate::graph::Graph;
use crate::pattern::{is_triangle, looping_pattern, IndexedSubmatrix};
use crate::util::WordSet;

pub const LOOPING_CHECK_MAX_VERTICES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForcerConstraint {
    Any,
    /// The set of vertices that force must equal this set.
    Exactly(VertexSet),
    /// Every vertex that forces must lie in this set.
    SubsetOf(VertexSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceConstraints {
    pub initial: VertexSet,
    pub forcers: ForcerConstraint,
    /// Every forced vertex must lie in this set, when given.
    pub forced_subset: Option<VertexSet>,
    /// Only initially filled vertices may force.
    pub direct: bool,
}

impl SequenceConstraints {
    pub fn from(initial: VertexSet) -> Self {
        SequenceConstraints {
            initial,
            forcers: ForcerConstraint::Any,
            forced_subset: None,
            direct: false,
        }
    }
}

/// A complete forcing sequence meeting `c`, found by backtracking over legal
/// forces (lowest forcer, then lowest forced, first).
///
/// Restricted closures are monotone, so a branch is abandoned as soon as the
/// allowed forcers can no longer fill the graph; failed `(filled, forcers
/// used)` states are memoized.
pub fn sequence_search<'a>(
    rule: ForcingRule,
    target: impl Into<Target<'a>>,
    c: &SequenceConstraints,
) -> Option<ForcingRecord> {
    let k = Kernel::new(target.into());
    let mut allowed = match c.forcers {
        ForcerConstraint::Any => k.full,
        ForcerConstraint::Exactly(r) | ForcerConstraint::SubsetOf(r) => r.0 & k.full,
    };
    if c.direct {
        allowed &= c.initial.0;
    }
    let exact = match c.forcers {
        ForcerConstraint::Exactly(r) => {
            if r.0 & !allowed != 0 {
                return None;
            }
            Some(r.0)
        }
        _ => None,
    };
    let forced_ok = c.forced_subset.map_or(k.full, |s| s.0) | c.initial.0;
    if k.full & !forced_ok != 0 {
        return None;
    }
    let mut search = Search {
        k: &k,
        rule,
        allowed,
        exact,
        failed: WordSet::default(),
        forces: Vec::new(),
    };
    let initial = c.initial.0 & k.full;
    search
        .dfs(initial, 0)
        .then(|| ForcingRecord::new(VertexSet(initial), search.forces))
}

struct Search<'k> {
    k: &'k Kernel,
    rule: ForcingRule,
    allowed: u64,
    exact: Option<u64>,
    failed: WordSet<(u64, u64)>,
    forces: Vec<Force>,
}

impl Search<'_> {
    fn dfs(&mut self, filled: u64, used: u64) -> bool {
        if filled == self.k.full {
            return self.exact.is_none_or(|r| r == used);
        }
        if self.failed.contains(&(filled, used)) {
            return false;
        }
        if self.k.close(self.rule, filled, self.allowed) != self.k.full {
            self.failed.insert((filled, used));
            return false;
        }
        for f in self.k.legal_forces(self.rule, filled, self.allowed) {
            self.forces.push(f);
            if self.dfs(filled | 1 << f.forced, used | 1 << f.forcer) {
                return true;
            }
            self.forces.pop();
        }
        self.failed.insert((filled, used));
        false
    }
}

/// The set obtained by swapping each chain's source with its terminal: the
/// vertices that never force.
pub fn reversal(g: &Graph, rec: &ForcingRecord) -> Result<VertexSet> {
    if !rec.is_complete(g.n()) {
        return Err(Error::IncompleteRecord);
    }
    Ok(g.vertices() - rec.forcers())
}

fn check_sizes(r: VertexSet, c: VertexSet) -> Result<()> {
    if r.len() != c.len() {
        return Err(Error::NonSquare {
            rows: r.len(),
            cols: c.len(),
        });
    }
    Ok(())
}

/// Whether `(R, C)` is a triangle in every looping's pattern, decided by a
/// standard forcing sequence from `V ∖ C` whose forcers are exactly `R`.
pub fn persistent_triangle_check(g: &Graph, r: VertexSet, c: VertexSet) -> Result<bool> {
    check_sizes(r, c)?;
    let cons = SequenceConstraints {
        forcers: ForcerConstraint::Exactly(r),
        ..SequenceConstraints::from(g.vertices() - c)
    };
    Ok(sequence_search(ForcingRule::Standard, g, &cons).is_some())
}

/// The same question answered directly: `(R, C)` is a triangle in all `2^n`
/// looping patterns.
pub fn persistent_triangle_by_loopings(g: &Graph, r: VertexSet, c: VertexSet) -> Result<bool> {
    check_sizes(r, c)?;
    cap(
        "looping enumeration vertex count",
        LOOPING_CHECK_MAX_VERTICES,
        g.n(),
    )?;
    let sel = IndexedSubmatrix::new(r.to_vec(), c.to_vec());
    for loops in 0u64..(1 << g.n()) {
        if !is_triangle(&looping_pattern(&g.with_loops(VertexSet(loops))), &sel)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Persistent with `R ∩ C = ∅`.
pub fn immutable_triangle_check(g: &Graph, r: VertexSet, c: VertexSet) -> Result<bool> {
    check_sizes(r, c)?;
    Ok((r & c).is_empty() && persistent_triangle_check(g, r, c)?)
}

fn largest_triangle_by(
    g: &Graph,
    check: impl Fn(&Graph, VertexSet, VertexSet) -> Result<bool>,
) -> Result<(usize, VertexSet, VertexSet)> {
    cap(
        "triangle search vertex count",
        LOOPING_CHECK_MAX_VERTICES,
        g.n(),
    )?;
    let v = g.vertices();
    for k in (0..=g.n()).rev() {
        for c in subsets_of_size(v, k) {
            for r in subsets_of_size(v, k) {
                if check(g, r, c)? {
                    return Ok((k, r, c));
                }
            }
        }
    }
    unreachable!("the empty triangle is persistent")
}

/// Largest persistent triangle `(k, R, C)`, by search over all pairs.
pub fn largest_persistent_triangle(g: &Graph) -> Result<(usize, VertexSet, VertexSet)> {
    largest_triangle_by(g, persistent_triangle_check)
}

/// Largest immutable triangle `(k, R, C)`, by search over all pairs.
pub fn largest_immutable_triangle(g: &Graph) -> Result<(usize, VertexSet, VertexSet)> {
    largest_triangle_by(g, immutable_triangle_check)
}

/// Searches every psd forcing sequence from every initial set for a strictly
/// psd force made after some standard force. Returns the filled set and the
/// offending force if one exists.
pub fn strict_psd_after_standard(g: &Graph) -> Result<Option<(VertexSet, Force)>> {
    cap(
        "sequence enumeration vertex count",
        LOOPING_CHECK_MAX_VERTICES,
        g.n(),
    )?;
    let k = Kernel::new(Target::Graph(g));
    // states reached after at least one standard force
    let mut seen: WordSet<u64> = WordSet::default();
    let mut stack: Vec<u64> = Vec::new();
    for filled in 0..=k.full {
        for f in k.legal_forces(ForcingRule::Psd, filled, k.full) {
            if !f.strictly_psd {
                let next = filled | 1 << f.forced;
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
    while let Some(filled) = stack.pop() {
        for f in k.legal_forces(ForcingRule::Psd, filled, k.full) {
            if f.strictly_psd {
                return Ok(Some((VertexSet(filled), f)));
            }
            let next = filled | 1 << f.forced;
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Ok(None)
}
