//! Plain edge lists: one `u v` pair per line, 0-based, `#` starts a
//! comment. An optional leading line holding a single integer fixes the
//! vertex count; otherwise it is one more than the largest id.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::MalformedEdgeList {
                line: line_no,
                reason: format!("`{s}` is not a vertex id"),
            })
        };
        match fields.as_slice() {
            [n] if !seen_content => declared = Some(num(n)?),
            [u, v] => edges.push((num(u)?, num(v)?)),
            _ => {
                return Err(Error::MalformedEdgeList {
                    line: line_no,
                    reason: "expected two vertex ids".into(),
                })
            }
        }
        seen_content = true;
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(inferred);
    if n < inferred {
        return Err(Error::MalformedEdgeList {
            line: 1,
            reason: format!("declared {n} vertices but ids reach {}", inferred - 1),
        });
    }
    Graph::from_edge_list(n, &edges).map_err(|e| Error::MalformedEdgeList {
        line: 0,
        reason: e.to_string(),
    })
}

/// Writes the vertex count line followed by the sorted edges.
pub fn format(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}
