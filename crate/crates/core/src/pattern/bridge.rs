use super::Pattern;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, LoopGraph};

/// Pattern of the adjacency matrix of a looping: off-diagonal `*` at edges,
/// diagonal `*` at loops.
pub fn looping_pattern(h: &LoopGraph) -> Pattern {
    let n = h.n();
    let rows = (0..n).map(|v| h.loop_neighbors(v).0).collect();
    Pattern::from_row_masks(rows, n).expect("graph sizes fit pattern dimensions")
}

/// Cross-edge pattern of a bipartition: rows are `v1` and columns `v2`, both
/// in ascending id order; `*` marks an edge between the two sides.
pub fn pattern_from_partition(g: &Graph, v1: VertexSet, v2: VertexSet) -> Result<Pattern> {
    g.validate_partition(v1, v2)?;
    if v1.is_empty() || v2.is_empty() {
        return Err(Error::InvalidPartition(
            "both sides must be nonempty".into(),
        ));
    }
    let cols = v2.to_vec();
    let rows = v1
        .iter()
        .map(|r| {
            cols.iter()
                .enumerate()
                .filter(|&(_, &c)| g.has_edge(r, c))
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    Pattern::from_row_masks(rows, cols.len())
}

/// Result of removing all-zero rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrippedPattern {
    pub pattern: Pattern,
    /// Number of all-zero rows removed.
    pub k1: usize,
    /// Number of all-zero columns removed.
    pub k2: usize,
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
}

pub fn strip_zero_lines(y: &Pattern) -> Result<StrippedPattern> {
    let kept_rows: Vec<usize> = (0..y.m()).filter(|&i| y.row_mask(i) != 0).collect();
    let kept_cols: Vec<usize> = (0..y.n()).filter(|&j| y.col_mask(j) != 0).collect();
    if kept_rows.is_empty() {
        return Err(Error::AllZeroPattern);
    }
    Ok(StrippedPattern {
        pattern: y.submatrix(&kept_rows, &kept_cols),
        k1: y.m() - kept_rows.len(),
        k2: y.n() - kept_cols.len(),
        kept_rows,
        kept_cols,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figures;
    use crate::pattern::tri_number;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn looping_patterns() {
        let k1 = Graph::empty(1).with_loops(VertexSet::EMPTY);
        assert_eq!(looping_pattern(&k1).to_text(), "0\n");
        let k2 = Graph::complete(2).with_loops(VertexSet::full(2));
        assert_eq!(looping_pattern(&k2).to_text(), "**\n**\n");
        let g = figures::fig1();
        let y = looping_pattern(&g.with_loops(VertexSet::from_labels(&[3])));
        assert_eq!(
            y.to_text(),
            "00*00*0\n00**00*\n*******\n0**000*\n00*00*0\n*0*0*00\n0***000\n"
        );
    }

    #[test]
    fn partition_patterns() {
        let p = pattern_from_partition(
            &figures::fig2_g2(),
            VertexSet::from_labels(&[1, 2, 3]),
            VertexSet::from_labels(&[4, 5, 6]),
        )
        .unwrap();
        assert_eq!(p.to_text(), "***\n0**\n00*\n");
        let p = pattern_from_partition(
            &figures::fig4(),
            VertexSet::from_labels(&[1, 2, 3]),
            VertexSet::from_labels(&[4, 5, 6]),
        )
        .unwrap();
        assert_eq!(p, figures::fig4_pattern());
        let two = Graph::empty(2);
        let p =
            pattern_from_partition(&two, VertexSet::singleton(0), VertexSet::singleton(1)).unwrap();
        assert_eq!(p.to_text(), "0\n");
        assert!(pattern_from_partition(&two, VertexSet::singleton(0), VertexSet::EMPTY).is_err());
    }

    #[test]
    fn strip_examples() {
        let s = strip_zero_lines(&figures::fig6_pattern()).unwrap();
        assert_eq!((s.k1, s.k2), (0, 1));
        assert_eq!(s.pattern, figures::fig4_pattern());
        let y = figures::fig4_pattern();
        let s = strip_zero_lines(&y).unwrap();
        assert_eq!((s.pattern.clone(), s.k1, s.k2), (y, 0, 0));
        assert_eq!(
            strip_zero_lines(&Pattern::zeros(2, 3).unwrap()),
            Err(Error::AllZeroPattern)
        );
    }

    #[test]
    fn strip_preserves_tri() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let m = rng.gen_range(1..=6);
            let n = rng.gen_range(1..=6);
            let mut y = Pattern::zeros(m, n).unwrap();
            for i in 0..m {
                for j in 0..n {
                    y.set(i, j, rng.gen_bool(0.5));
                }
            }
            for i in 0..m {
                if rng.gen_bool(0.2) {
                    for j in 0..n {
                        y.set(i, j, false);
                    }
                }
            }
            for j in 0..n {
                if rng.gen_bool(0.2) {
                    for i in 0..m {
                        y.set(i, j, false);
                    }
                }
            }
            match strip_zero_lines(&y) {
                Ok(s) => assert_eq!(tri_number(&s.pattern), tri_number(&y)),
                Err(e) => {
                    assert_eq!(e, Error::AllZeroPattern);
                    assert_eq!(tri_number(&y), 0);
                }
            }
        }
    }
}
