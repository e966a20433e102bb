//! The graph6 format: a size header followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// One graph6 line together with its decoded graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Record {
    pub raw: String,
    pub graph: Graph,
}

impl Graph6Record {
    pub fn parse(line: &str) -> Result<Self> {
        let graph = decode(line)?;
        Ok(Graph6Record {
            raw: line.trim_end_matches(['\n', '\r']).to_string(),
            graph,
        })
    }
}

fn malformed(position: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 {
        position,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], at: usize, offset: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(malformed(offset + at, format!("byte {b:#04x} outside 63..=126"))),
        None => Err(malformed(offset + at, "unexpected end of input")),
    }
}

fn decode_size(bytes: &[u8], offset: usize) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0, offset)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let (start, digits) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let mut n = 0u64;
    for i in 0..digits {
        n = (n << 6) | sextet(bytes, start + i, offset)?;
    }
    Ok((n as usize, start + digits))
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn decode(line: &str) -> Result<Graph> {
    let mut s = line.trim_end_matches(['\n', '\r']);
    let mut offset = 0;
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
        offset = HEADER.len();
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(malformed(offset, "empty record"));
    }
    let (n, header_len) = decode_size(bytes, offset)?;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() != body_len {
        let at = offset + header_len + body.len().min(body_len);
        return Err(malformed(
            at,
            format!("expected {body_len} body bytes for n = {n}, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body, k / 6, offset + header_len)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(body, body_len - 1, offset + header_len)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(malformed(offset + header_len + body_len - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Encodes `g` with the shortest size header.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
