//! Slow, obviously-correct reference implementations used to check the
//! library. They share no code with it beyond the graph and pattern types.
#![allow(dead_code)]

use itertools::Itertools;
use zflab::{Graph, Pattern};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rule {
    Standard,
    Psd,
    /// Loop rule with the given looped vertices (bitmask).
    Loop(u64),
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Applies single forces until nothing changes.
pub fn close(adj: &[Vec<bool>], rule: Rule, mut filled: Vec<bool>) -> Vec<bool> {
    let n = adj.len();
    loop {
        let mut changed = false;
        match rule {
            Rule::Standard | Rule::Loop(_) => {
                for v in 0..n {
                    let looped = matches!(rule, Rule::Loop(l) if l >> v & 1 == 1);
                    if matches!(rule, Rule::Standard) && !filled[v] {
                        continue;
                    }
                    let open: Vec<usize> = (0..n)
                        .filter(|&u| !filled[u] && (adj[v][u] || (looped && u == v)))
                        .collect();
                    if open.len() == 1 {
                        filled[open[0]] = true;
                        changed = true;
                    }
                }
            }
            Rule::Psd => {
                // components of the unfilled vertices
                let mut comp = vec![usize::MAX; n];
                for s in 0..n {
                    if filled[s] || comp[s] != usize::MAX {
                        continue;
                    }
                    let mut stack = vec![s];
                    comp[s] = s;
                    while let Some(x) = stack.pop() {
                        for y in 0..n {
                            if adj[x][y] && !filled[y] && comp[y] == usize::MAX {
                                comp[y] = s;
                                stack.push(y);
                            }
                        }
                    }
                }
                'outer: for v in (0..n).filter(|&v| filled[v]) {
                    let roots: Vec<usize> = (0..n)
                        .filter(|&u| !filled[u])
                        .map(|u| comp[u])
                        .unique()
                        .collect();
                    for r in roots {
                        let open: Vec<usize> = (0..n)
                            .filter(|&u| !filled[u] && comp[u] == r && adj[v][u])
                            .collect();
                        if open.len() == 1 {
                            filled[open[0]] = true;
                            changed = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if !changed {
            return filled;
        }
    }
}

pub fn zf_number(g: &Graph, rule: Rule) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    for k in 0..=n {
        for s in (0..n).combinations(k) {
            let mut filled = vec![false; n];
            for v in s {
                filled[v] = true;
            }
            if close(&adj, rule, filled).iter().all(|&b| b) {
                return k;
            }
        }
    }
    unreachable!()
}

fn is_lower_triangle(y: &Pattern, rows: &[usize], cols: &[usize]) -> bool {
    let k = rows.len();
    (0..k).all(|i| y.get(rows[i], cols[i]) && (i + 1..k).all(|j| !y.get(rows[i], cols[j])))
}

/// A square selection is a triangle iff some row order and column order make
/// it lower triangular with a nonzero diagonal.
pub fn is_triangle(y: &Pattern, rows: &[usize], cols: &[usize]) -> bool {
    let k = rows.len();
    (0..k).permutations(k).any(|rp| {
        let r: Vec<usize> = rp.iter().map(|&i| rows[i]).collect();
        (0..k).permutations(k).any(|cp| {
            let c: Vec<usize> = cp.iter().map(|&j| cols[j]).collect();
            is_lower_triangle(y, &r, &c)
        })
    })
}

/// Largest triangle, trying every selection and ordering of the columns
/// (the row order is then forced up to the check).
pub fn tri_number(y: &Pattern) -> usize {
    let (m, n) = (y.m(), y.n());
    for k in (1..=m.min(n)).rev() {
        for rows in (0..m).combinations(k) {
            for cols in (0..n).permutations(k) {
                if (0..k).permutations(k).any(|rp| {
                    let r: Vec<usize> = rp.iter().map(|&i| rows[i]).collect();
                    is_lower_triangle(y, &r, &cols)
                }) {
                    return k;
                }
            }
        }
    }
    0
}

/// Dense GF(2) rank by Gauss-Jordan on boolean rows.
pub fn gf2_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] {
                for (x, &q) in row.iter_mut().zip(&pivot) {
                    *x ^= q;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn gf2_max_nullity(g: &Graph) -> usize {
    let n = g.n();
    let adj = adjacency(g);
    (0u64..1 << n)
        .map(|d| {
            let mut a = adj.clone();
            for v in 0..n {
                a[v][v] = d >> v & 1 == 1;
            }
            n - gf2_rank(a)
        })
        .max()
        .unwrap()
}
