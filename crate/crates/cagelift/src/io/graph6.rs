//! graph6: the printable-character encoding of a simple graph's upper
//! adjacency triangle, 6 bits per byte offset by 63.

use thiserror::Error;

use crate::voltage::SimpleGraph;

/// Largest order the 18-bit size header carries.
const MAX_N: usize = (1 << 18) - 1;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 size header")]
    MalformedHeader,
    #[error("bit region has {got} characters, expected {expected}")]
    TruncatedBits { expected: usize, got: usize },
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    NonPrintableChar { pos: usize, byte: u8 },
    #[error("{extra} unexpected trailing characters")]
    TrailingData { extra: usize },
}

/// Decode one graph6 line (an optional `>>graph6<<` prefix and trailing
/// newline are accepted). Vertices are labeled by their indices.
pub fn read_graph6(text: &str) -> Result<SimpleGraph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::NonPrintableChar { pos, byte });
        }
    }
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader);
    }
    let (n, header_len) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        if bytes[1] == b'~' {
            // The 36-bit form exceeds the supported range.
            return Err(Graph6Error::MalformedHeader);
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let pair_count = n * n.saturating_sub(1) / 2;
    let expected = pair_count.div_ceil(6);
    let got = bytes.len() - header_len;
    if got < expected {
        return Err(Graph6Error::TruncatedBits { expected, got });
    }
    if got > expected {
        return Err(Graph6Error::TrailingData {
            extra: got - expected,
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + bit_index / 6] - 63;
            if byte >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    SimpleGraph::from_unlabeled_edges(n, &edges).map_err(|_| Graph6Error::MalformedHeader)
}

/// Encode to canonical graph6 (no prefix, no newline).
pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    assert!(
        n <= MAX_N,
        "graph6 output supports at most {MAX_N} vertices"
    );
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut current = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            current <<= 1;
            if g.has_edge(i, j) {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}
