//! graph6 encoding.
//!
//! The order is written as one byte `n + 63` for `n ≤ 62`, or `~` followed by
//! three 6-bit groups for `n ≤ 258047`. The upper triangle of the adjacency
//! matrix is then emitted column by column (`(0,1), (0,2), (1,2), (0,3), …`)
//! and packed six bits per byte, most significant bit first, each byte
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

const MAX_ORDER: usize = 258_047;

pub fn encode(g: &SimpleGraph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 supports at most {MAX_ORDER} vertices");
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
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<SimpleGraph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside the graph6 range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Graph6("unsupported or truncated order prefix".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if pairs % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1u8 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    SimpleGraph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        assert_eq!(encode(&SimpleGraph::complete(4)), "C~");
        assert_eq!(decode("C~").unwrap(), SimpleGraph::complete(4));
    }

    #[test]
    fn known_strings() {
        // Reference strings as produced by nauty's geng/showg.
        assert_eq!(encode(&SimpleGraph::empty(1)), "@");
        assert_eq!(encode(&SimpleGraph::complete(2)), "A_");
        assert_eq!(encode(&SimpleGraph::path(3)), "Bg");
        assert_eq!(encode(&SimpleGraph::cycle(5)), "Dhc");
        assert_eq!(encode(&SimpleGraph::petersen()).len(), 9);
    }

    #[test]
    fn large_order_prefix() {
        let g = SimpleGraph::path(70);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("A`").is_err());
    }
}
