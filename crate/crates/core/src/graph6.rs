//! graph6 codec.
//!
//! A line is a size prefix followed by the upper triangle of the adjacency
//! matrix in column order `(0,1),(0,2),(1,2),(0,3),...`, six bits per byte,
//! most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Largest order [`write_graph6`] emits (single size byte).
pub const MAX_WRITE: usize = 62;

fn format_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };

    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(format_err(base + i, format!("byte {b:#04x} outside [63, 126]")));
        }
    }

    let (n, header_len) = match body.first() {
        None => return Err(format_err(base, "empty line")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                return Err(format_err(base, "eight-byte size form is not supported"));
            }
            if body.len() < 4 {
                return Err(format_err(base + body.len(), "truncated size field"));
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - OFFSET));
            (n, 4)
        }
        Some(&b) => (usize::from(b - OFFSET), 1),
    };
    if n > MAX_VERTICES {
        return Err(format_err(base, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }

    let cells = n * n.saturating_sub(1) / 2;
    let expected = cells.div_ceil(6);
    let payload = &body[header_len..];
    if payload.len() != expected {
        return Err(format_err(
            base + header_len + payload.len().min(expected),
            format!("expected {expected} payload bytes for n = {n}, found {}", payload.len()),
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - OFFSET;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

/// Encodes `g` as a graph6 line without the trailing newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_WRITE {
        return Err(Error::TooLarge(n, MAX_WRITE));
    }
    let cells = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + cells.div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
