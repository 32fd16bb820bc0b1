//! Graph interchange formats: graph6, DOT export, and a plain edge-list text
//! format for fixtures.
//!
//! The graph6 codec follows the standard format definition: an order header
//! (`n+63` for `n <= 62`, or `126` followed by three 6-bit groups), then the
//! upper triangle of the adjacency matrix in column-major order, packed
//! big-endian into 6-bit groups offset by 63. Strings are canonical: exactly
//! the required bytes, zero padding bits.

use crate::graph::Graph;
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors from the strict graph6 parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 alphabet")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated header")]
    TruncatedHeader,
    #[error("order {0} beyond supported range")]
    OrderTooLarge(u64),
    #[error("expected {expected} bytes, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
}

/// Errors from the edge-list text parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListParseError {
    #[error("missing header line")]
    MissingHeader,
    #[error("bad header line {0:?}: expected \"n m\"")]
    BadHeader(String),
    #[error("bad edge line {0:?}: expected \"u v\"")]
    BadEdgeLine(String),
    #[error("header promised {expected} edges, found {got}")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error("edge line {line:?}: {source}")]
    BadEdge {
        line: String,
        source: crate::graph::GraphError,
    },
}

const MAX_GRAPH6_ORDER: u64 = 258_047;

/// Parses a graph6 string. Leading `>>graph6<<` headers and surrounding
/// whitespace are tolerated; everything else is strict.
pub fn parse_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let s = input.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as u64, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
        (n, 4)
    } else {
        // 126 126 prefix: the 36-bit form for orders beyond 258047.
        if bytes.len() < 8 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let n = bytes[2..8]
            .iter()
            .fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
        return Err(Graph6Error::OrderTooLarge(n));
    };
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let n = n as usize;
    let pair_bits = n * (n.saturating_sub(1)) / 2;
    let body_len = pair_bits.div_ceil(6);
    if bytes.len() != header_len + body_len {
        return Err(Graph6Error::WrongLength {
            expected: header_len + body_len,
            got: bytes.len(),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[header_len + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge_mut(u, v).unwrap();
            }
            bit += 1;
            if bit == pair_bits {
                break 'outer;
            }
        }
    }
    // Remaining bits in the last byte must be zero padding.
    while bit < body_len * 6 {
        let byte = bytes[header_len + bit / 6] - 63;
        if byte >> (5 - bit % 6) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding);
        }
        bit += 1;
    }
    Ok(g)
}

/// Emits the canonical graph6 string for `g`.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 0x3f) as u8 + 63);
        out.push((n >> 6 & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Renders `g` in DOT. `labels` attaches `label=` attributes to the listed
/// vertices; everything is emitted in ascending order so output is stable.
pub fn to_dot(g: &Graph, labels: Option<&BTreeMap<usize, String>>) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.order() {
        match labels.and_then(|m| m.get(&v)) {
            Some(name) => out.push_str(&format!("  {} [label=\"{}\"];\n", v, name)),
            None => out.push_str(&format!("  {};\n", v)),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", u, v));
    }
    out.push_str("}\n");
    out
}

/// Parses the fixture edge-list format: a header line `n m` followed by `m`
/// lines `u v`. Blank lines and `#` comments are skipped.
pub fn parse_edge_list_text(input: &str) -> Result<Graph, EdgeListParseError> {
    let mut lines = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or(EdgeListParseError::MissingHeader)?;
    let parse_pair = |line: &str| -> Option<(usize, usize)> {
        let mut it = line.split_whitespace();
        let a = it.next()?.parse().ok()?;
        let b = it.next()?.parse().ok()?;
        if it.next().is_some() {
            return None;
        }
        Some((a, b))
    };
    let (n, m) =
        parse_pair(header).ok_or_else(|| EdgeListParseError::BadHeader(header.to_string()))?;
    let mut g = Graph::empty(n);
    let mut got = 0;
    for line in lines {
        let (u, v) =
            parse_pair(line).ok_or_else(|| EdgeListParseError::BadEdgeLine(line.to_string()))?;
        g.add_edge_mut(u, v).map_err(|source| EdgeListParseError::BadEdge {
            line: line.to_string(),
            source,
        })?;
        got += 1;
    }
    if got != m {
        return Err(EdgeListParseError::EdgeCountMismatch { expected: m, got });
    }
    Ok(g)
}

/// Emits the fixture edge-list format; inverse of [`parse_edge_list_text`].
pub fn emit_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    // ---- graph6 ----

    #[test]
    fn k2_is_the_known_two_byte_string() {
        let g = generate::clique(2);
        assert_eq!(emit_graph6(&g), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), g);
    }

    #[test]
    fn known_small_strings_round_trip() {
        // P_4 and C_4 differ in exactly the closing edge.
        let p4 = generate::path(4);
        let c4 = generate::cycle(4).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&p4)).unwrap(), p4);
        assert_eq!(parse_graph6(&emit_graph6(&c4)).unwrap(), c4);
        assert_ne!(emit_graph6(&p4), emit_graph6(&c4));
        // Petersen graph string from the format's reference corpus.
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(petersen.order(), 10);
        assert_eq!(petersen.size(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
        assert_eq!(emit_graph6(&petersen), "IheA@GUAo");
    }

    #[test]
    fn optional_format_header_accepted() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g, generate::clique(2));
    }

    #[test]
    fn long_order_header() {
        let g = generate::path(63);
        let s = emit_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_strings_are_rejected() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("A"), Err(Graph6Error::WrongLength { expected: 2, got: 1 }));
        assert!(matches!(parse_graph6("A_X"), Err(Graph6Error::WrongLength { .. })));
        assert!(matches!(
            parse_graph6("A\u{1}"),
            Err(Graph6Error::InvalidByte { pos: 1, byte: 1 })
        ));
        assert!(matches!(parse_graph6("~"), Err(Graph6Error::TruncatedHeader)));
        // K_2 body with a nonzero bit in the padding area.
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn zero_and_one_vertex_graphs() {
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
    }

    // ---- DOT ----

    #[test]
    fn dot_output_is_stable() {
        let g = generate::path(3);
        assert_eq!(to_dot(&g, None), "graph g {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
        let mut labels = BTreeMap::new();
        labels.insert(1usize, "center".to_string());
        let dot = to_dot(&g, Some(&labels));
        assert!(dot.contains("1 [label=\"center\"];"));
    }

    // ---- edge-list text ----

    #[test]
    fn edge_list_round_trip() {
        let g = generate::star(3);
        let text = emit_edge_list_text(&g);
        assert_eq!(text, "4 3\n0 1\n0 2\n0 3\n");
        assert_eq!(parse_edge_list_text(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_tolerates_comments() {
        let g = parse_edge_list_text("# a triangle\n3 3\n0 1\n\n1 2\n0 2\n").unwrap();
        assert_eq!(g, generate::clique(3));
    }

    #[test]
    fn edge_list_rejects_mismatch() {
        assert_eq!(
            parse_edge_list_text("3 2\n0 1\n"),
            Err(EdgeListParseError::EdgeCountMismatch { expected: 2, got: 1 })
        );
        assert!(matches!(
            parse_edge_list_text("3 1\n0 9\n"),
            Err(EdgeListParseError::BadEdge { .. })
        ));
        assert!(matches!(
            parse_edge_list_text("nonsense"),
            Err(EdgeListParseError::BadHeader(_))
        ));
    }
}
