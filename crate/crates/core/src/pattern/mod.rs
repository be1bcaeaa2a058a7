//! Zero-nonzero patterns: `m x n` grids over `{0, *}`.

mod bridge;
mod triangle;

pub use bridge::{looping_pattern, pattern_from_partition, strip_zero_lines, StrippedPattern};
pub use triangle::{
    has_triangle_of_size, is_triangle, largest_triangle, tri_bruteforce, tri_number,
    triangle_by_permutation, BRUTEFORCE_MAX_DIM,
};

use crate::error::{Error, Result};
use std::fmt;

pub const MAX_DIM: usize = 64;

/// A zero-nonzero pattern; `true` entries are `*`.
///
/// Rows are stored as column bitmasks, so dimensions are capped at 64.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    rows: Vec<u64>,
    cols: usize,
}

impl Pattern {
    pub fn zeros(m: usize, n: usize) -> Result<Self> {
        check_dims(m, n)?;
        Ok(Pattern {
            rows: vec![0; m],
            cols: n,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut p = Pattern::zeros(n, n).expect("valid dims");
        for i in 0..n {
            p.set(i, i, true);
        }
        p
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        check_dims(m, n)?;
        let mut p = Pattern::zeros(m, n)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    r.len()
                )));
            }
            for (j, &b) in r.iter().enumerate() {
                p.set(i, j, b);
            }
        }
        Ok(p)
    }

    /// Builds from row bitmasks (bit `j` of `rows[i]` is entry `(i, j)`).
    pub fn from_row_masks(rows: Vec<u64>, n: usize) -> Result<Self> {
        check_dims(rows.len(), n)?;
        let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if rows.iter().any(|&r| r & !limit != 0) {
            return Err(Error::Parse("row mask exceeds column count".into()));
        }
        Ok(Pattern { rows, cols: n })
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, star: bool) {
        assert!(i < self.m() && j < self.n());
        if star {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Row `i` as a bitmask over columns.
    #[inline]
    pub fn row_mask(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// Column `j` as a bitmask over rows.
    pub fn col_mask(&self, j: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r >> j & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn row_masks(&self) -> &[u64] {
        &self.rows
    }

    pub fn star_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> Pattern {
        Pattern {
            rows: (0..self.n()).map(|j| self.col_mask(j)).collect(),
            cols: self.m(),
        }
    }

    /// Submatrix on the given rows and columns, in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Pattern {
        let mut p = Pattern::zeros(rows.len().max(1), cols.len().max(1)).expect("valid dims");
        p.rows.truncate(rows.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                p.set(a, b, self.get(i, j));
            }
        }
        p.cols = cols.len();
        p
    }

    /// Parses the grid text format: one row per line, `0` or `*` per entry,
    /// spaces and tabs ignored, blank lines skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<bool>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let mut row = Vec::new();
            for ch in line.chars() {
                match ch {
                    '0' => row.push(false),
                    '*' => row.push(true),
                    ' ' | '\t' | '\r' => {}
                    other => {
                        return Err(Error::Parse(format!(
                            "line {}: illegal character {other:?}",
                            lineno + 1
                        )))
                    }
                }
            }
            if row.is_empty() {
                continue;
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse(format!(
                        "line {}: ragged row of length {} (expected {})",
                        lineno + 1,
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("empty pattern".into()));
        }
        Pattern::from_rows(&rows)
    }

    /// Canonical text form: one line per row, no separators, trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.m() * (self.n() + 1));
        for i in 0..self.m() {
            for j in 0..self.n() {
                s.push(if self.get(i, j) { '*' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::Parse(format!(
            "pattern dimensions must be positive, got {m}x{n}"
        )));
    }
    if m > MAX_DIM || n > MAX_DIM {
        return Err(Error::SizeCap {
            what: "pattern dimension",
            limit: MAX_DIM,
            got: m.max(n),
        });
    }
    Ok(())
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Pattern {}x{}", self.m(), self.n())?;
        f.write_str(&self.to_text())
    }
}

/// Row and column index lists selecting a submatrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedSubmatrix {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl IndexedSubmatrix {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        IndexedSubmatrix { rows, cols }
    }

    pub fn full(y: &Pattern) -> Self {
        IndexedSubmatrix {
            rows: (0..y.m()).collect(),
            cols: (0..y.n()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let y = Pattern::parse("*00\n**0\n***\n").unwrap();
        assert_eq!((y.m(), y.n(), y.star_count()), (3, 3, 6));
        let one = Pattern::parse("*").unwrap();
        assert_eq!((one.m(), one.n()), (1, 1));
        assert!(one.get(0, 0));
        assert!(matches!(Pattern::parse("0*\n*"), Err(Error::Parse(_))));
        assert!(matches!(Pattern::parse("0x"), Err(Error::Parse(_))));
        assert!(Pattern::parse("\n\n").is_err());
    }

    #[test]
    fn spaces_are_ignored() {
        let a = Pattern::parse("* 0 *\n0 * 0").unwrap();
        let b = Pattern::parse("*0*\n0*0").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_text(), "*0*\n0*0\n");
    }

    #[test]
    fn transpose_and_submatrix() {
        let y = Pattern::parse("*0\n**\n0*").unwrap();
        let t = y.transpose();
        assert_eq!(t.to_text(), "**0\n0**\n");
        assert_eq!(t.transpose(), y);
        let s = y.submatrix(&[2, 0], &[1, 0]);
        assert_eq!(s.to_text(), "*0\n0*\n");
    }

    fn arb_pattern() -> impl Strategy<Value = Pattern> {
        (1usize..=9, 1usize..=9).prop_flat_map(|(m, n)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), m)
                .prop_map(|rows| Pattern::from_rows(&rows).unwrap())
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(y in arb_pattern()) {
            let text = y.to_text();
            let back = Pattern::parse(&text).unwrap();
            prop_assert_eq!(&back, &y);
            prop_assert_eq!(back.to_text(), text);
        }
    }
}
