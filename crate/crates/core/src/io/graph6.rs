//! graph6 encoding of simple graphs.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s
        .strip_prefix(">>graph6<<")
        .unwrap_or(s)
        .trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    let err = |msg: &str| Error::Parse(format!("graph6: {msg}"));
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(&format!("byte {b:#04x} outside the printable range")));
    }
    let (n, body) = match bytes {
        [] => return Err(err("empty string")),
        [126, 126, ..] => return Err(err("vertex count too large")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated header"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n == 0 {
        return Err(err("graph has no vertices"));
    }
    crate::error::cap("vertex count", MAX_VERTICES, n)?;
    let total = n * (n - 1) / 2;
    let need = total.div_ceil(6);
    if body.len() < need {
        return Err(err("truncated adjacency data"));
    }
    if body.len() > need {
        return Err(err("trailing bytes"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if total % 6 != 0 && (body[need - 1] - 63) & ((1 << (6 - total % 6)) - 1) != 0 {
        return Err(err("nonzero padding bits"));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.labeled_edges(), vec![(1, 5), (2, 5), (3, 5), (4, 5)]);
        assert_eq!(emit_graph6(&g), "D?{");
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
    }

    #[test]
    fn malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{?").is_err());
        assert!(parse_graph6("D?|").is_err());
        assert!(parse_graph6("?").is_err());
        assert!(parse_graph6("~").is_err());
        assert!(parse_graph6("D ?").is_err());
    }

    #[test]
    fn large_header() {
        let g = Graph::cycle(64);
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
