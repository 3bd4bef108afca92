//! Text encodings: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups, each written as
//! the byte `63 + value`, after a one-byte vertex count `63 + n`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Parse("empty graph6 string".into()));
    };
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")));
        }
    }
    if first == 126 {
        // Multi-byte vertex counts only occur for n >= 63.
        return Err(Error::TooManyVertices { n: 63, max: MAX_VERTICES });
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            bits.div_ceil(6)
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::Parse("nonzero graph6 padding bits".into()));
    }
    let mut k = 0;
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Edge-list text: first line `n`, then one `u v` pair per line, 0-indexed.
/// Blank lines and lines starting with `#` are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("missing vertex count".into()))?;
    let n: usize = header.parse().map_err(|_| Error::Parse(format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<usize> {
            let tok = parts.next().ok_or_else(|| Error::Parse(format!("expected `u v`, got {line:?}")))?;
            tok.parse().map_err(|_| Error::Parse(format!("bad vertex {tok:?}")))
        };
        let (u, v) = (next()?, next()?);
        if parts.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens in {line:?}")));
        }
        edges.push((u, v));
    }
    let mut g = Graph::empty(n)?;
    for (u, v) in edges {
        g = g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_graph6_strings() {
        // Reference encodings from the graph6 format description.
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3), "Bg");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn graph6_errors() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("Bh").is_err()); // padding bit set
        assert!(matches!(from_graph6("~?@A"), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn edge_list_parsing() {
        let g = from_edge_list("4\n0 1\n1 2\n\n# comment\n2 3\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(from_edge_list("3\n0 0\n").is_err());
        assert!(from_edge_list("3\n0 1\n0 1\n").is_err());
        assert!(from_edge_list("3\n0 5\n").is_err());
        assert!(from_edge_list("x\n").is_err());
        assert!(from_edge_list("3\n0 1 2\n").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=32).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = to_graph6(&g);
            prop_assert_eq!(from_graph6(&s).unwrap(), g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        }
    }
}
