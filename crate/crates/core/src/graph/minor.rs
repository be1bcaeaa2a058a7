use super::Graph;
use crate::error::{cap, Result};
use std::collections::HashSet;

pub const HADWIGER_MAX_VERTICES: usize = 12;

/// Largest `k` such that `K_k` is a minor of `g`.
///
/// A clique minor only needs contractions: after contracting, any clique of
/// the contracted graph is a clique minor. The search contracts edges
/// depth-first, remembering visited contracted graphs, and is bounded above
/// by `tw(g) + 1` (treewidth does not grow under minors and `tw(K_k) = k - 1`)
/// and below by the clique number.
pub fn hadwiger_number(g: &Graph) -> Result<usize> {
    cap("Hadwiger vertex count", HADWIGER_MAX_VERTICES, g.n())?;
    let lower = g.clique_number();
    let ceiling = super::treewidth_exact(g)? + 1;
    if lower >= ceiling {
        return Ok(lower);
    }
    let mut search = Search {
        best: lower,
        ceiling,
        seen: HashSet::new(),
    };
    let adj: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).0).collect();
    search.visit(adj);
    Ok(search.best)
}

struct Search {
    best: usize,
    ceiling: usize,
    seen: HashSet<Vec<u64>>,
}

impl Search {
    fn visit(&mut self, adj: Vec<u64>) {
        if self.best >= self.ceiling {
            return;
        }
        let n = adj.len();
        let edges: usize = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        if upper_bound(n, edges) <= self.best {
            return;
        }
        let omega = clique_number_raw(&adj);
        self.best = self.best.max(omega);
        if upper_bound(n - 1, edges) <= self.best {
            return;
        }
        for u in 0..n {
            let mut higher = adj[u] & !((1u64 << (u + 1)) - 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                let next = contract(&adj, u, v);
                if self.seen.insert(next.clone()) {
                    self.visit(next);
                    if self.best >= self.ceiling {
                        return;
                    }
                }
            }
        }
    }
}

/// `k` vertices and `k(k-1)/2` edges are needed for `K_k`.
fn upper_bound(n: usize, edges: usize) -> usize {
    let mut k = 0;
    while k < n && (k + 1) * k / 2 <= edges {
        k += 1;
    }
    k
}

fn drop_bit(x: u64, v: usize) -> u64 {
    let low = x & ((1u64 << v) - 1);
    let high = (x >> (v + 1)) << v;
    low | high
}

/// Contracts edge `uv` (u < v) into `u` and relabels contiguously.
fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(adj.len() - 1);
    for (w, &row) in adj.iter().enumerate() {
        if w == v {
            continue;
        }
        let mut r = row;
        if w == u {
            r |= adj[v];
            r &= !(1u64 << u);
        } else if r >> v & 1 == 1 {
            r |= 1u64 << u;
        }
        r &= !(1u64 << v);
        out.push(drop_bit(r, v));
    }
    out
}

fn clique_number_raw(adj: &[u64]) -> usize {
    fn expand(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(adj, size + 1, cand & adj[v], best);
        }
    }
    let mut best = 0;
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    expand(adj, 0, all, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figures;

    #[test]
    fn cliques_and_cycles() {
        assert_eq!(hadwiger_number(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(hadwiger_number(&Graph::cycle(7)).unwrap(), 3);
        assert_eq!(hadwiger_number(&Graph::path(6)).unwrap(), 2);
        assert_eq!(hadwiger_number(&Graph::empty(3)).unwrap(), 1);
    }

    #[test]
    fn figure_graphs() {
        assert_eq!(hadwiger_number(&figures::fig6()).unwrap(), 4);
        assert_eq!(hadwiger_number(&figures::fig4()).unwrap(), 4);
    }

    #[test]
    fn petersen_has_k5_minor_but_no_k6() {
        // outer 5-cycle, inner pentagram, spokes
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        assert_eq!(hadwiger_number(&g).unwrap(), 5);
    }

    #[test]
    fn wheel_contracts_to_k4() {
        let mut g = Graph::cycle(6);
        let mut w = Graph::empty(7);
        for (u, v) in g.edges() {
            w.add_edge(u, v);
        }
        for i in 0..6 {
            w.add_edge(i, 6);
        }
        g = w;
        assert_eq!(hadwiger_number(&g).unwrap(), 4);
    }

    #[test]
    fn size_cap() {
        assert!(hadwiger_number(&Graph::empty(13)).is_err());
    }
}
