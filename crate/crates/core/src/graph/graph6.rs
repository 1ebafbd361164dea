//! graph6 encoding of the labelled upper adjacency triangle.
//!
//! Header: one byte `63 + n` for `n <= 62`, otherwise `126` followed by three
//! bytes carrying `n` in big-endian 6-bit groups. Body: bits `x(0,1), x(0,2),
//! x(1,2), x(0,3), ...` packed six per byte, most significant first, each byte
//! offset by 63 and zero-padded at the end.

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 string truncated at offset {offset}: expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph6 encodes {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let byte = *bytes.get(offset).ok_or(Graph6Error::Truncated {
        offset,
        expected: offset + 1,
    })?;
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    Ok(byte - 63)
}

/// Decodes one graph6 line. A leading `>>graph6<<` and a trailing line
/// terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let body = body.trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    let at = |i: usize| i + skip;
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let first = sextet(bytes, 0).map_err(|e| shift(e, skip))?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        let second = sextet(bytes, 1).map_err(|e| shift(e, skip))?;
        if second == 63 {
            // 8-byte header: n >= 258048
            return Err(Graph6Error::TooManyVertices(1 << 18));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, skip))? as usize;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    let mut g = Graph::empty(n).expect("n checked");
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = sextet(bytes, pos + idx / 6).map_err(|e| match e {
                Graph6Error::Truncated { offset, .. } => Graph6Error::Truncated {
                    offset: at(offset),
                    expected: at(pos + body_len),
                },
                other => shift(other, skip),
            })?;
            if byte & (0b100000 >> (idx % 6)) != 0 {
                g.rows[u] |= super::bit(v);
                g.rows[v] |= super::bit(u);
            }
            idx += 1;
            if idx == pairs {
                break 'outer;
            }
        }
    }
    if pairs % 6 != 0 {
        let last = pos + body_len - 1;
        let pad_mask = (1u8 << (6 - pairs % 6)) - 1;
        if sextet(bytes, last).map_err(|e| shift(e, skip))? & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: at(last) });
        }
    }
    pos += body_len;
    if bytes.len() > pos {
        return Err(Graph6Error::TrailingData { offset: at(pos) });
    }
    Ok(g)
}

fn shift(e: Graph6Error, by: usize) -> Graph6Error {
    match e {
        Graph6Error::InvalidByte { offset, byte } => Graph6Error::InvalidByte {
            offset: offset + by,
            byte,
        },
        Graph6Error::Truncated { offset, expected } => Graph6Error::Truncated {
            offset: offset + by,
            expected: expected + by,
        },
        other => other,
    }
}

/// Encodes the labelled graph. Not an isomorphism-canonical form.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
