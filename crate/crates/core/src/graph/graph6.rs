//! graph6 encoding (McKay's ASCII format for undirected simple graphs).
//!
//! The short size form covers `n <= 62`; the four-byte form up to
//! `n <= 258047` is also read and written. An optional `>>graph6<<` header
//! is accepted on input.

use super::{Edge, Graph};
use thiserror::Error;

pub const MAX_VERTICES: usize = 258_047;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("byte {offset}: bit field truncated, expected {expected} bytes in total")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: unexpected trailing data")]
    Trailing { offset: usize },
    #[error("byte {offset}: nonzero padding bits")]
    Padding { offset: usize },
    #[error("byte {offset}: size header not supported (n above {MAX_VERTICES})")]
    UnsupportedSize { offset: usize },
    #[error("graph on {0} vertices exceeds the graph6 writer limit of {MAX_VERTICES}")]
    TooLarge(usize),
}

fn value(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        Some(&b @ 63..=126) => Ok((b - 63) as u64),
        Some(&byte) => Err(Graph6Error::OutOfRange { offset, byte }),
        None => Err(Graph6Error::Truncated {
            offset,
            expected: offset + 1,
        }),
    }
}

/// Decodes one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut line = text.trim();
    let mut base = text.len() - text.trim_start().len();
    if let Some(rest) = line.strip_prefix(HEADER) {
        line = rest;
        base += HEADER.len();
    }
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let at = |e: Graph6Error| shift(e, base);
    let (n, start) = if bytes[0] != 126 {
        (value(bytes, 0).map_err(at)? as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(at(Graph6Error::UnsupportedSize { offset: 1 }));
        }
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | value(bytes, i).map_err(at)?;
        }
        (n as usize, 4)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let expected = start + nbytes;
    if bytes.len() < expected {
        return Err(at(Graph6Error::Truncated {
            offset: bytes.len(),
            expected,
        }));
    }
    if bytes.len() > expected {
        return Err(at(Graph6Error::Trailing { offset: expected }));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = start + k / 6;
            let word = value(bytes, byte).map_err(at)?;
            if word >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge(i, j));
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    for byte in start..expected {
        value(bytes, byte).map_err(at)?;
    }
    if nbits % 6 != 0 {
        let last = expected - 1;
        let pad = 6 - nbits % 6;
        if value(bytes, last).map_err(at)? & ((1 << pad) - 1) != 0 {
            return Err(at(Graph6Error::Padding { offset: last }));
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 bit field encodes a simple graph"))
}

fn shift(e: Graph6Error, base: usize) -> Graph6Error {
    use Graph6Error::*;
    match e {
        OutOfRange { offset, byte } => OutOfRange {
            offset: offset + base,
            byte,
        },
        Truncated { offset, expected } => Truncated {
            offset: offset + base,
            expected: expected + base,
        },
        Trailing { offset } => Trailing {
            offset: offset + base,
        },
        Padding { offset } => Padding {
            offset: offset + base,
        },
        UnsupportedSize { offset } => UnsupportedSize {
            offset: offset + base,
        },
        other => other,
    }
}

/// Encodes `g` without relabelling and without a trailing newline.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
