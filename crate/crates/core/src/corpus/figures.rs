//! Named graphs and patterns backed by the files in `data/`.

use crate::graph::Graph;
use crate::io::parse_edge_list;
use crate::pattern::Pattern;

/// `(file name, contents)` for every data file, in a fixed order.
pub const DATA_FILES: &[(&str, &str)] = &[
    ("fig1.txt", include_str!("data/fig1.txt")),
    ("fig2_g1.txt", include_str!("data/fig2_g1.txt")),
    ("fig2_g2.txt", include_str!("data/fig2_g2.txt")),
    ("fig2_y.txt", include_str!("data/fig2_y.txt")),
    ("fig3.txt", include_str!("data/fig3.txt")),
    ("fig4.txt", include_str!("data/fig4.txt")),
    ("fig4_y.txt", include_str!("data/fig4_y.txt")),
    ("fig5_y.txt", include_str!("data/fig5_y.txt")),
    ("fig6.txt", include_str!("data/fig6.txt")),
    ("fig6_y.txt", include_str!("data/fig6_y.txt")),
    ("fig7_h.txt", include_str!("data/fig7_h.txt")),
    ("fig7_y.txt", include_str!("data/fig7_y.txt")),
    ("fig8.txt", include_str!("data/fig8.txt")),
    ("pentasun.txt", include_str!("data/pentasun.txt")),
    (
        "extended_pentasun.txt",
        include_str!("data/extended_pentasun.txt"),
    ),
    ("heawood.txt", include_str!("data/heawood.txt")),
];

fn data(name: &str) -> &'static str {
    DATA_FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .unwrap_or_else(|| panic!("no data file {name}"))
}

fn graph(name: &str) -> Graph {
    parse_edge_list(data(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn pattern(name: &str) -> Pattern {
    Pattern::parse(data(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fig1() -> Graph {
    graph("fig1.txt")
}

pub fn fig2_g1() -> Graph {
    graph("fig2_g1.txt")
}

pub fn fig2_g2() -> Graph {
    graph("fig2_g2.txt")
}

pub fn fig2_pattern() -> Pattern {
    pattern("fig2_y.txt")
}

pub fn fig3() -> Graph {
    graph("fig3.txt")
}

pub fn fig4() -> Graph {
    graph("fig4.txt")
}

pub fn fig4_pattern() -> Pattern {
    pattern("fig4_y.txt")
}

/// The 8 x 7 pattern; its graph is built by `cobipartite_from_pattern`.
pub fn fig5_pattern() -> Pattern {
    pattern("fig5_y.txt")
}

pub fn fig5() -> Graph {
    crate::cobipartite::cobipartite_from_pattern(&fig5_pattern())
        .expect("15 vertices")
        .graph
}

pub fn fig6() -> Graph {
    graph("fig6.txt")
}

pub fn fig6_pattern() -> Pattern {
    pattern("fig6_y.txt")
}

pub fn fig7_h() -> Graph {
    graph("fig7_h.txt")
}

pub fn fig7_pattern() -> Pattern {
    pattern("fig7_y.txt")
}

pub fn fig8() -> Graph {
    graph("fig8.txt")
}

pub fn pentasun() -> Graph {
    graph("pentasun.txt")
}

pub fn extended_pentasun() -> Graph {
    graph("extended_pentasun.txt")
}

pub fn heawood() -> Graph {
    graph("heawood.txt")
}

pub fn heawood_complement() -> Graph {
    heawood().complement()
}

/// SHA-256 of the data files as last reviewed by hand.
pub const TRANSCRIPTION_SHA256: &str =
    "83b8bd233ffabe554af07dfd085a17787bc5104235274af7e261de965dadfc0b";

/// SHA-256 over every data file's name and contents.
pub fn transcription_digest() -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    for (name, text) in DATA_FILES {
        h.update(name.as_bytes());
        h.update([0]);
        h.update(text.as_bytes());
        h.update([0]);
    }
    hex::encode(h.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::VertexSet;

    #[test]
    fn transcription_checksum() {
        assert_eq!(transcription_digest(), TRANSCRIPTION_SHA256);
    }

    #[test]
    fn all_files_load() {
        let sizes: Vec<(usize, usize)> = [
            fig1(),
            fig2_g1(),
            fig2_g2(),
            fig3(),
            fig4(),
            fig6(),
            fig7_h(),
            fig8(),
            pentasun(),
            extended_pentasun(),
            heawood(),
        ]
        .iter()
        .map(|g| (g.n(), g.edge_count()))
        .collect();
        assert_eq!(
            sizes,
            vec![
                (7, 11),
                (6, 9),
                (6, 12),
                (6, 7),
                (6, 12),
                (7, 15),
                (6, 11),
                (9, 11),
                (10, 10),
                (15, 15),
                (14, 21)
            ]
        );
        assert_eq!(heawood_complement().edge_count(), 91 - 21);
        assert_eq!((fig5_pattern().m(), fig5_pattern().n()), (8, 7));
    }

    #[test]
    fn fig5_complement_cross_edges() {
        // bipartite edges of the complement, rows 1..8 to columns 9..15
        let expected: [&[usize]; 8] = [
            &[10, 12, 14],
            &[10, 11, 13],
            &[11, 12, 15],
            &[13, 14, 15],
            &[13, 14],
            &[9, 11, 12, 15],
            &[9, 10, 12, 14],
            &[9, 10, 11, 13],
        ];
        let co = fig5().complement();
        for (r, cols) in expected.iter().enumerate() {
            let got = co.neighbors(r) & VertexSet::from_iter_ids(8..15);
            assert_eq!(got, VertexSet::from_labels(cols), "row {}", r + 1);
        }
    }

    #[test]
    fn heawood_is_bipartite_cubic() {
        let h = heawood();
        assert!((0..14).all(|v| h.degree(v) == 3));
        assert!(h.bipartition(h.vertices()).is_some());
        assert!(heawood_complement().is_cobipartite());
    }
}
