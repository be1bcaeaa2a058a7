//! Invariants that must hold on every cobipartite instance, independent of
//! any hypothesis.

use super::{gf2_max_nullity, gf2_pattern_rank, CobipartiteInstance, IdentityVerdict};
use crate::error::{Error, Result};
use crate::forcing::{enhanced_zf_number, zf_number, ForcingRule};
use crate::graph::{treewidth_exact, Graph};
use crate::pattern::{pattern_from_partition, strip_zero_lines, tri_number};

fn within_caps<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::SizeCap { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn value(verdicts: &[IdentityVerdict], name: &str, lhs: bool) -> Option<i64> {
    let v = verdicts.iter().find(|v| v.identity == name)?;
    if lhs {
        v.lhs
    } else {
        v.rhs
    }
}

/// Descriptions of every violated invariant. Values already present in
/// `verdicts` are reused rather than recomputed.
pub fn check_invariants(
    inst: &CobipartiteInstance,
    verdicts: &[IdentityVerdict],
) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let g = &inst.graph;
    let z = match value(verdicts, "b_zhat_eq_z", false) {
        Some(z) => Some(z as usize),
        None => within_caps(zf_number(ForcingRule::Standard, g).map(|r| r.number))?,
    };
    let zhat = match value(verdicts, "b_zhat_eq_z", true) {
        Some(v) => Some(v as usize),
        None => within_caps(enhanced_zf_number(g).map(|r| r.number))?,
    };
    let nullity = within_caps(gf2_max_nullity(g))?;
    if let (Some(m), Some(zh), Some(z)) = (nullity, zhat, z) {
        if !(m <= zh && zh <= z) {
            bad.push(format!("GF(2) nullity {m} <= Zhat {zh} <= Z {z} fails"));
        }
    }
    if let (Some(tw), Some(z)) = (within_caps(treewidth_exact(g))?, z) {
        let delta = g.min_degree();
        if !(delta <= tw && tw <= z) {
            bad.push(format!("min degree {delta} <= tw {tw} <= Z {z} fails"));
        }
    }
    let (rank, tri) = (gf2_pattern_rank(&inst.pattern), tri_number(&inst.pattern));
    if rank < tri {
        bad.push(format!("GF(2) pattern rank {rank} < tri {tri}"));
    }
    let back = pattern_from_partition(g, inst.partition.v1, inst.partition.v2)?;
    if back != inst.pattern {
        bad.push("pattern does not round-trip through the partition".into());
    }
    if let Ok(stripped) = strip_zero_lines(&inst.pattern) {
        let from_strip = super::cobipartite_from_pattern(&stripped.pattern)?;
        if core_in_side_order(inst).as_ref() != Some(&from_strip.graph) {
            bad.push("stripping zero lines differs from deleting unsaturated vertices".into());
        }
    }
    Ok(bad)
}

/// The saturated core relabeled so that kept `V1` vertices come first, then
/// kept `V2` vertices, each side ascending.
fn core_in_side_order(inst: &CobipartiteInstance) -> Option<Graph> {
    let (u1, u2) = inst.graph.unsaturated_vertices(&inst.partition);
    let (h, ids) = inst.graph.delete_vertices(u1 | u2).ok()?;
    let order = (inst.partition.v1 - u1)
        .iter()
        .chain((inst.partition.v2 - u2).iter());
    let mut perm = vec![0; h.n()];
    for (pos, v) in order.enumerate() {
        perm[ids.get(v).expect("kept vertex")] = pos;
    }
    Some(h.permuted(&perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobipartite::{cobipartite_from_pattern, verify_identities};
    use crate::corpus::figures;

    #[test]
    fn figures_satisfy_invariants() {
        for y in [
            figures::fig4_pattern(),
            figures::fig6_pattern(),
            figures::fig7_pattern(),
        ] {
            let inst = cobipartite_from_pattern(&y).unwrap();
            let vs = verify_identities(&inst);
            assert_eq!(check_invariants(&inst, &vs).unwrap(), Vec::<String>::new());
        }
    }
}
