//! Seeded and exhaustive instance families.

use crate::bitset::VertexSet;
use crate::error::{cap, Error, Result};
use crate::graph::Graph;
use crate::pattern::Pattern;
use crate::util::WordSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EXHAUSTIVE_GRAPH_MAX: usize = 7;
pub const EXHAUSTIVE_PATTERN_MAX_ENTRIES: usize = 20;
pub const NONISOMORPHIC_MAX: usize = 9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_pattern(rng: &mut impl Rng, m: usize, n: usize, density: f64) -> Result<Pattern> {
    let mut y = Pattern::zeros(m, n)?;
    let density = density.clamp(0.0, 1.0);
    for i in 0..m {
        for j in 0..n {
            y.set(i, j, rng.gen_bool(density));
        }
    }
    Ok(y)
}

/// Random pattern in which every row and column has a `*`, so the
/// associated cobipartite graph is saturated.
pub fn random_saturated_pattern(rng: &mut impl Rng, m: usize, n: usize) -> Result<Pattern> {
    loop {
        let density = rng.gen_range(0.2..0.8);
        let y = random_pattern(rng, m, n, density)?;
        if (0..m).all(|i| y.row_mask(i) != 0) && (0..n).all(|j| y.col_mask(j) != 0) {
            return Ok(y);
        }
    }
}

/// Random pattern with `k1` all-zero rows and `k2` all-zero columns inserted
/// at random positions into a saturated `m x n` core.
pub fn random_unsaturated_pattern(
    rng: &mut impl Rng,
    m: usize,
    n: usize,
    k1: usize,
    k2: usize,
) -> Result<Pattern> {
    let core = random_saturated_pattern(rng, m, n)?;
    let mut row_slots: Vec<bool> = (0..m + k1).map(|i| i < k1).collect();
    let mut col_slots: Vec<bool> = (0..n + k2).map(|j| j < k2).collect();
    row_slots.shuffle(rng);
    col_slots.shuffle(rng);
    let mut y = Pattern::zeros(m + k1, n + k2)?;
    let rows: Vec<usize> = (0..m + k1).filter(|&i| !row_slots[i]).collect();
    let cols: Vec<usize> = (0..n + k2).filter(|&j| !col_slots[j]).collect();
    for (a, &i) in rows.iter().enumerate() {
        for (b, &j) in cols.iter().enumerate() {
            y.set(i, j, core.get(a, b));
        }
    }
    Ok(y)
}

/// Random cobipartite graph on `n` vertices: two random cliques plus random
/// cross edges, with vertices shuffled.
pub fn random_cobipartite(rng: &mut impl Rng, n: usize) -> Result<Graph> {
    cap("vertex count", crate::graph::MAX_VERTICES, n)?;
    if n < 2 {
        return Err(Error::InvalidGraph("need at least 2 vertices".into()));
    }
    let m = rng.gen_range(1..n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let density = rng.gen_range(0.1..0.9);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let same_side = (u < m) == (v < m);
            if same_side || rng.gen_bool(density) {
                g.add_edge(perm[u], perm[v]);
            }
        }
    }
    Ok(g)
}

/// Random `k`-tree on `n ≥ k + 1` vertices: start from `K_{k+1}`, then attach
/// each new vertex to a uniformly chosen existing `k`-clique.
pub fn random_ktree(rng: &mut impl Rng, k: usize, n: usize) -> Result<Graph> {
    cap("vertex count", crate::graph::MAX_VERTICES, n)?;
    if k == 0 || n < k + 1 {
        return Err(Error::InvalidGraph(format!(
            "a {k}-tree needs k >= 1 and n >= {}",
            k + 1
        )));
    }
    let mut g = Graph::empty(n);
    let base = VertexSet::full(k + 1);
    for u in 0..=k {
        for v in u + 1..=k {
            g.add_edge(u, v);
        }
    }
    let mut cliques: Vec<VertexSet> = base
        .iter()
        .map(|v| base - VertexSet::singleton(v))
        .collect();
    for v in k + 1..n {
        let c = *cliques.choose(rng).expect("nonempty");
        for u in c {
            g.add_edge(u, v);
        }
        for u in c {
            cliques.push((c - VertexSet::singleton(u)) | VertexSet::singleton(v));
        }
    }
    Ok(g)
}

/// A clique `K_t` with extra vertices, each attached to a random subset of
/// the clique and to earlier extras.
pub fn random_clique_with_attachments(rng: &mut impl Rng, max_n: usize) -> Result<Graph> {
    cap("vertex count", crate::graph::MAX_VERTICES, max_n)?;
    let n = rng.gen_range(3.min(max_n)..=max_n);
    let t = rng.gen_range(2.min(n)..=n);
    let mut g = Graph::empty(n);
    for u in 0..t {
        for v in u + 1..t {
            g.add_edge(u, v);
        }
    }
    for v in t..n {
        for u in 0..v {
            let p = if u < t { 0.35 } else { 0.5 };
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Every labeled graph on `n` vertices, in edge-mask order.
pub fn exhaustive_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    cap("exhaustive graph order", EXHAUSTIVE_GRAPH_MAX, n)?;
    if n == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let mut g = Graph::empty(n);
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    }))
}

/// Every `m x n` pattern, in entry-mask order (row-major bits).
pub fn exhaustive_patterns(m: usize, n: usize) -> Result<impl Iterator<Item = Pattern>> {
    Pattern::zeros(m, n)?;
    cap(
        "exhaustive pattern entries",
        EXHAUSTIVE_PATTERN_MAX_ENTRIES,
        m * n,
    )?;
    let count = 1u64 << (m * n);
    Ok((0..count).map(move |mask| {
        let rows = (0..m).map(|i| mask >> (i * n) & ((1 << n) - 1)).collect();
        Pattern::from_row_masks(rows, n).expect("valid dims")
    }))
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// built by extending the classes on `n - 1` vertices with a new vertex in all
/// possible ways and keeping one graph per canonical form.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    cap("isomorphism-class order", NONISOMORPHIC_MAX, n)?;
    if n == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen: WordSet<u64> = WordSet::default();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0u64..(1 << (size - 1)) {
                let mut h = Graph::empty(size);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in VertexSet(nbrs) {
                    h.add_edge(u, size - 1);
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

fn adjacency_code(g: &Graph, order: &[usize]) -> u64 {
    // order[p] is the vertex placed at position p
    let mut code = 0u64;
    for q in 1..order.len() {
        for p in 0..q {
            code = code << 1 | g.has_edge(order[p], order[q]) as u64;
        }
    }
    code
}

/// Canonical code (n ≤ 11): the largest adjacency code over all vertex
/// orders consistent with an isomorphism-invariant color refinement.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(
        g.n() <= 11,
        "canonical codes fit in 64 bits only for n <= 11"
    );
    let colors = refine_colors(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (v, &c) in colors.iter().enumerate() {
        if cells.len() <= c {
            cells.resize(c + 1, Vec::new());
        }
        cells[c].push(v);
    }
    let mut order = Vec::with_capacity(g.n());
    let mut best = 0u64;
    permute_cells(g, &cells, 0, &mut order, &mut best);
    best
}

fn permute_cells(
    g: &Graph,
    cells: &[Vec<usize>],
    ci: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if ci == cells.len() {
        *best = (*best).max(adjacency_code(g, order));
        return;
    }
    for p in crate::util::permutations(cells[ci].len()) {
        let len = order.len();
        order.extend(p.iter().map(|&i| cells[ci][i]));
        permute_cells(g, cells, ci + 1, order, best);
        order.truncate(len);
    }
}

/// Stable color refinement starting from degrees; colors are ranks of
/// invariant signatures, so isomorphic graphs get matching color classes.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let before = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        if distinct.len() == before {
            return next;
        }
        colors = next;
    }
}

/// Every `k`-tree on `n` vertices reachable by a construction sequence from
/// `K_{k+1}`, one per canonical form.
pub fn all_ktrees(k: usize, n: usize) -> Result<Vec<Graph>> {
    cap("k-tree scan order", NONISOMORPHIC_MAX, n)?;
    if k == 0 || n < k + 1 {
        return Err(Error::InvalidGraph(format!(
            "a {k}-tree needs k >= 1 and n >= {}",
            k + 1
        )));
    }
    let mut level = vec![Graph::complete(k + 1)];
    for size in k + 2..=n {
        let mut seen: WordSet<u64> = WordSet::default();
        let mut next = Vec::new();
        for g in &level {
            let old = g.vertices();
            for c in crate::bitset::subsets_of_size(old, k) {
                if !g.is_clique(c) {
                    continue;
                }
                let mut h = Graph::empty(size);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in c {
                    h.add_edge(u, size - 1);
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ktree_recognize;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive_patterns(2, 2).unwrap().count(), 16);
        assert_eq!(exhaustive_graphs(4).unwrap().count(), 64);
        let mut texts: Vec<String> = exhaustive_patterns(2, 3)
            .unwrap()
            .map(|p| p.to_text())
            .collect();
        texts.sort();
        texts.dedup();
        assert_eq!(texts.len(), 64);
    }

    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| nonisomorphic_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let mut r = rng(4);
        for _ in 0..100 {
            let n = r.gen_range(1..=8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if r.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut r);
            assert_eq!(canonical_code(&g), canonical_code(&g.permuted(&perm)));
        }
    }

    #[test]
    fn ktrees_are_recognized() {
        let mut r = rng(11);
        for _ in 0..50 {
            let k = r.gen_range(1..=4);
            let n = r.gen_range(k + 1..=12);
            assert_eq!(
                ktree_recognize(&random_ktree(&mut r, k, n).unwrap()),
                Some(k)
            );
        }
        let g = random_ktree(&mut rng(1), 3, 6).unwrap();
        assert_eq!(ktree_recognize(&g), Some(3));
        // 1-trees on 6 vertices are the 6 trees
        assert_eq!(all_ktrees(1, 6).unwrap().len(), 6);
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_pattern(&mut rng(7), 5, 4, 0.5).unwrap();
        let b = random_pattern(&mut rng(7), 5, 4, 0.5).unwrap();
        assert_eq!(a, b);
        let a = random_cobipartite(&mut rng(7), 10).unwrap();
        assert!(a.is_cobipartite());
        assert_eq!(a, random_cobipartite(&mut rng(7), 10).unwrap());
    }

    #[test]
    fn injected_zero_lines() {
        let mut r = rng(2);
        for _ in 0..50 {
            let y = random_unsaturated_pattern(&mut r, 3, 4, 2, 1).unwrap();
            let s = crate::pattern::strip_zero_lines(&y).unwrap();
            assert_eq!((y.m(), y.n(), s.k1, s.k2), (5, 5, 2, 1));
        }
    }
}
