use super::{IndexedSubmatrix, Pattern};
use crate::error::{cap, Error, Result};
use crate::util::{permutations, WordSet};

pub const BRUTEFORCE_MAX_DIM: usize = 7;

/// Whether the selected square submatrix can be permuted to lower-triangular
/// form with an all-`*` diagonal.
///
/// Greedy peeling: a triangle's first row has a single `*` (its diagonal
/// entry), and any row with a single `*` among the remaining columns can be
/// taken as that first row without loss.
pub fn is_triangle(y: &Pattern, s: &IndexedSubmatrix) -> Result<bool> {
    if s.rows.len() != s.cols.len() {
        return Err(Error::NonSquare {
            rows: s.rows.len(),
            cols: s.cols.len(),
        });
    }
    let mut live_cols = 0u64;
    for &j in &s.cols {
        if j >= y.n() {
            return Err(Error::Parse(format!("column {j} out of range")));
        }
        if live_cols >> j & 1 == 1 {
            return Err(Error::Parse(format!("column {j} selected twice")));
        }
        live_cols |= 1 << j;
    }
    let mut live_rows = 0u64;
    for &i in &s.rows {
        if i >= y.m() {
            return Err(Error::Parse(format!("row {i} out of range")));
        }
        if live_rows >> i & 1 == 1 {
            return Err(Error::Parse(format!("row {i} selected twice")));
        }
        live_rows |= 1 << i;
    }
    Ok(peels_completely(y, live_rows, live_cols))
}

pub(crate) fn peels_completely(y: &Pattern, mut rows: u64, mut cols: u64) -> bool {
    while rows != 0 {
        let mut peeled = false;
        let mut it = rows;
        while it != 0 {
            let i = it.trailing_zeros() as usize;
            it &= it - 1;
            let hit = y.row_mask(i) & cols;
            if hit.count_ones() == 1 {
                rows &= !(1 << i);
                cols &= !hit;
                peeled = true;
                break;
            }
        }
        if !peeled {
            return false;
        }
    }
    true
}

/// Triangle number: the order of a largest triangular submatrix.
pub fn tri_number(y: &Pattern) -> usize {
    TriSearch::run(y, None).best
}

/// A largest triangle, as `(rows, cols)` listed so that row `i` meets column
/// `i` on the diagonal and the submatrix is lower triangular.
pub fn largest_triangle(y: &Pattern) -> IndexedSubmatrix {
    let s = TriSearch::run(y, None);
    s.witness()
}

/// Whether `y` contains a triangle of order at least `k`.
pub fn has_triangle_of_size(y: &Pattern, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    TriSearch::run(y, Some(k)).best >= k
}

/// Depth-first search that grows a triangle from its last diagonal entry
/// backwards. The state is the set `S` of columns already placed; the next
/// pair `(r, c)` needs a `*` at `c` and a `0` in every column of `S`. Rows
/// with a `*` in `S` can never be used again, so `S` alone determines the
/// future and serves as the memo key.
struct TriSearch {
    col_masks: Vec<u64>,
    target: Option<usize>,
    best: usize,
    best_path: Vec<(usize, usize)>,
    path: Vec<(usize, usize)>,
    seen: WordSet<u64>,
    transposed: bool,
}

impl TriSearch {
    fn run(y: &Pattern, target: Option<usize>) -> TriSearch {
        // search over the orientation with fewer columns
        let transposed = y.n() > y.m();
        let (col_masks, m) = if transposed {
            ((0..y.m()).map(|i| y.row_mask(i)).collect(), y.n())
        } else {
            ((0..y.n()).map(|j| y.col_mask(j)).collect::<Vec<_>>(), y.m())
        };
        let all_rows = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut s = TriSearch {
            col_masks,
            target,
            best: 0,
            best_path: Vec::new(),
            path: Vec::new(),
            seen: WordSet::default(),
            transposed,
        };
        s.dfs(0, all_rows);
        s
    }

    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best >= t)
    }

    fn dfs(&mut self, placed: u64, free_rows: u64) {
        let depth = self.path.len();
        if depth > self.best {
            self.best = depth;
            self.best_path = self.path.clone();
            if self.done() {
                return;
            }
        }
        let mut extendable = 0u64;
        for (c, &mask) in self.col_masks.iter().enumerate() {
            if placed >> c & 1 == 0 && mask & free_rows != 0 {
                extendable |= 1 << c;
            }
        }
        let room = (extendable.count_ones()).min(free_rows.count_ones()) as usize;
        let need = self.target.unwrap_or(self.best + 1).max(self.best + 1);
        if depth + room < need {
            return;
        }
        let mut it = extendable;
        while it != 0 {
            let c = it.trailing_zeros() as usize;
            it &= it - 1;
            let next = placed | 1 << c;
            if !self.seen.insert(next) {
                continue;
            }
            let candidates = self.col_masks[c] & free_rows;
            self.path.push((candidates.trailing_zeros() as usize, c));
            self.dfs(next, free_rows & !self.col_masks[c]);
            self.path.pop();
            if self.done() {
                return;
            }
        }
    }

    fn witness(&self) -> IndexedSubmatrix {
        // path holds (row, col) from the bottom of the triangle upwards
        let mut rows = Vec::new();
        let mut cols = Vec::new();
        for &(r, c) in self.best_path.iter().rev() {
            if self.transposed {
                rows.push(c);
                cols.push(r);
            } else {
                rows.push(r);
                cols.push(c);
            }
        }
        if self.transposed {
            // transposing turns lower into upper triangular; reverse the order
            rows.reverse();
            cols.reverse();
        }
        IndexedSubmatrix { rows, cols }
    }
}

/// Exhaustive triangle number: every square row/column selection, each
/// decided by trying all row and column orders.
pub fn tri_bruteforce(y: &Pattern) -> Result<usize> {
    cap(
        "brute-force pattern dimension",
        BRUTEFORCE_MAX_DIM,
        y.m().max(y.n()),
    )?;
    for k in (1..=y.m().min(y.n())).rev() {
        let perms = permutations(k);
        for rows in index_subsets(y.m(), k) {
            for cols in index_subsets(y.n(), k) {
                if triangle_by_permutation(y, &rows, &cols, &perms) {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// Permutation-enumeration triangle test on one selection.
pub fn triangle_by_permutation(
    y: &Pattern,
    rows: &[usize],
    cols: &[usize],
    perms: &[Vec<usize>],
) -> bool {
    let k = rows.len();
    debug_assert_eq!(k, cols.len());
    perms.iter().any(|p| {
        perms.iter().any(|q| {
            (0..k).all(|a| {
                y.get(rows[p[a]], cols[q[a]]) && (a + 1..k).all(|b| !y.get(rows[p[a]], cols[q[b]]))
            })
        })
    })
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::bitset::subsets_of_size(crate::bitset::VertexSet::full(n), k)
        .map(|s| s.to_vec())
        .collect()
}
