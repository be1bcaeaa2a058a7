//! Rank computations over GF(2), where a pattern has exactly one matrix and
//! a graph's symmetric matrices differ only on the diagonal.

use crate::error::{cap, Result};
use crate::graph::Graph;
use crate::pattern::Pattern;

pub const GF2_NULLITY_MAX_VERTICES: usize = 18;

/// Rank of the rows, each a bitmask over columns.
pub fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for r in 0..rows.len() {
        let pivot = rows[r..].iter().position(|&x| x != 0);
        let Some(p) = pivot else { break };
        rows.swap(r, r + p);
        let row = rows[r];
        let bit = row & row.wrapping_neg();
        for x in rows[r + 1..].iter_mut() {
            if *x & bit != 0 {
                *x ^= row;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the 0/1 matrix of `y`.
pub fn gf2_pattern_rank(y: &Pattern) -> usize {
    gf2_rank(y.row_masks().to_vec())
}

/// Maximum nullity over GF(2): the largest `n - rank(A + D)` over all `2^n`
/// diagonals `D`, with `A` the adjacency matrix.
pub fn gf2_max_nullity(g: &Graph) -> Result<usize> {
    cap(
        "GF(2) nullity vertex count",
        GF2_NULLITY_MAX_VERTICES,
        g.n(),
    )?;
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).0).collect();
    let mut best = 0;
    for diag in 0u64..(1 << n) {
        let rows = adj
            .iter()
            .enumerate()
            .map(|(v, &r)| r | (diag & 1 << v))
            .collect();
        best = best.max(n - gf2_rank(rows));
        if best == n {
            break;
        }
    }
    Ok(best)
}
