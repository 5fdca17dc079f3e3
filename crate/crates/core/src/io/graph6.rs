//! The graph6 format: a printable-ASCII encoding packing the upper
//! triangle of the adjacency matrix six bits per byte, offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn fail(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        format: "graph6",
        line: position,
        message: message.into(),
    }
}

const OPTIONAL_PREFIX: &str = ">>graph6<<";

/// Decode one graph6 string. A standard `>>graph6<<` prefix and trailing
/// whitespace are tolerated; anything else around the payload is an error.
/// Error positions are 1-based byte offsets into the payload.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let payload = text.strip_prefix(OPTIONAL_PREFIX).unwrap_or(text);
    let payload = payload.trim_end_matches(['\n', '\r', ' ', '\t']);
    let bytes = payload.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(fail(
                i + 1,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    if bytes.is_empty() {
        return Err(fail(0, "empty input"));
    }

    let (n, mut cursor) = decode_order(bytes)?;
    if n == 0 {
        return Err(fail(1, "graph must have at least one node"));
    }
    let bit_count = n * (n - 1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() - cursor < byte_count {
        return Err(fail(
            bytes.len(),
            format!(
                "truncated: {n} nodes need {byte_count} adjacency bytes, found {}",
                bytes.len() - cursor
            ),
        ));
    }
    if bytes.len() - cursor > byte_count {
        return Err(fail(
            cursor + byte_count + 1,
            "trailing garbage after the adjacency bytes",
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    // bits run down the columns of the upper triangle: (0,1), (0,2), (1,2), ...
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[cursor + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
            if bit >= bit_count {
                break 'outer;
            }
        }
    }
    // padding bits in the final byte must be zero
    if bit_count > 0 {
        let last = bytes[cursor + (bit_count - 1) / 6] - 63;
        let used_in_last = (bit_count - 1) % 6 + 1;
        if last & ((1 << (6 - used_in_last)) - 1) != 0 {
            return Err(fail(
                cursor + (bit_count - 1) / 6 + 1,
                "padding bits after the adjacency data are not zero",
            ));
        }
    }
    cursor += byte_count;
    debug_assert_eq!(cursor, bytes.len());
    Graph::build(n, &edges)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(fail(bytes.len(), "truncated multi-byte node count"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(fail(bytes.len(), "truncated multi-byte node count"));
    }
    let n = bytes[2..8]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    Ok((n, 8))
}

/// Encode a graph as one graph6 line (no prefix, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.node_count();
    let mut bytes = encode_order(n);
    let bit_count = n * (n - 1) / 2;
    let mut current = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            current <<= 1;
            if g.has_edge(u, v) {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((current << (6 - filled)) + 63);
    }
    debug_assert_eq!(bytes.len() - encode_order(n).len(), bit_count.div_ceil(6));
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

fn encode_order(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + 63));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + 63));
        out
    }
}
