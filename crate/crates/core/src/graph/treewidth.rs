use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{cap, Result};

pub const TREEWIDTH_MAX_VERTICES: usize = 18;

/// Exact treewidth by dynamic programming over elimination prefixes.
///
/// `best[S]` is the smallest achievable maximum back-degree when the vertices
/// of `S` are eliminated first. Eliminating `v` after `S` costs the number of
/// vertices outside `S + v` reachable from `v` through `S`.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    cap("treewidth vertex count", TREEWIDTH_MAX_VERTICES, n)?;
    let full = 1usize << n;
    let mut best = vec![u8::MAX; full];
    best[0] = 0;
    for s in 1..full {
        let set = VertexSet(s as u64);
        let mut value = u8::MAX;
        for v in set {
            let rest = set - VertexSet::singleton(v);
            let prev = best[rest.0 as usize];
            if prev >= value {
                continue;
            }
            let cost = back_degree(g, rest, v) as u8;
            value = value.min(prev.max(cost));
        }
        best[s] = value;
    }
    Ok(best[full - 1] as usize)
}

fn back_degree(g: &Graph, eliminated: VertexSet, v: usize) -> usize {
    let region = eliminated | VertexSet::singleton(v);
    let comp = g.component_of(VertexSet::singleton(v), region);
    let mut reach = VertexSet::EMPTY;
    for u in comp {
        reach |= g.neighbors(u);
    }
    (reach - region).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figures;

    #[test]
    fn known_values() {
        assert_eq!(treewidth_exact(&figures::fig7_h()).unwrap(), 3);
        assert_eq!(treewidth_exact(&figures::fig4()).unwrap(), 3);
        assert_eq!(treewidth_exact(&Graph::path(5)).unwrap(), 1);
        assert_eq!(treewidth_exact(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(treewidth_exact(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(treewidth_exact(&Graph::empty(4)).unwrap(), 0);
    }

    #[test]
    fn grid_3x3_has_treewidth_3() {
        let mut g = Graph::empty(9);
        for r in 0..3 {
            for c in 0..3 {
                let v = 3 * r + c;
                if c < 2 {
                    g.add_edge(v, v + 1);
                }
                if r < 2 {
                    g.add_edge(v, v + 3);
                }
            }
        }
        assert_eq!(treewidth_exact(&g).unwrap(), 3);
    }

    #[test]
    fn size_cap() {
        assert!(treewidth_exact(&Graph::empty(19)).is_err());
    }
}
