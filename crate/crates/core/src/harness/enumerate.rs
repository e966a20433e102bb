//! Orderly generation of graphs up to isomorphism by canonical
//! augmentation: a child is produced by adding one vertex to a parent and is
//! kept only if the new vertex lies in the orbit of the child's canonical
//! deletion vertex.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::canon::{self, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Executor;

/// Largest order accepted without an explicit opt-in.
pub const GIRTH5_GUARD: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub max_n: usize,
    /// Minimum girth; values below 4 impose no constraint.
    pub min_girth: usize,
    pub connected: bool,
}

/// Streams graphs level by level: all graphs on 1 vertex, then on 2, and so
/// on up to `max_n`.
pub struct Enumerator {
    spec: EnumSpec,
    exec: Executor,
    level: Vec<Graph>,
    next: usize,
}

impl Enumerator {
    pub fn new(spec: EnumSpec, exec: Executor) -> Self {
        let level = if spec.max_n >= 1 {
            vec![Graph::empty(1)]
        } else {
            Vec::new()
        };
        Enumerator {
            spec,
            exec,
            level,
            next: 0,
        }
    }

    /// Collects every graph, grouped by order.
    pub fn levels(mut self) -> Vec<Vec<Graph>> {
        let mut out = Vec::new();
        while !self.level.is_empty() {
            out.push(std::mem::take(&mut self.level));
            let parents = out.last().unwrap();
            if parents[0].n() >= self.spec.max_n {
                break;
            }
            self.level = children_of_level(parents, &self.spec, &self.exec);
        }
        out
    }
}

impl Iterator for Enumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if self.next < self.level.len() {
                self.next += 1;
                return Some(self.level[self.next - 1].clone());
            }
            let order = self.level.first()?.n();
            if order >= self.spec.max_n {
                self.level.clear();
                return None;
            }
            self.level = children_of_level(&self.level, &self.spec, &self.exec);
            self.next = 0;
        }
    }
}

fn children_of_level(parents: &[Graph], spec: &EnumSpec, exec: &Executor) -> Vec<Graph> {
    exec.map(parents, |_, p| children(p, spec))
        .into_iter()
        .flatten()
        .collect()
}

/// Neighbor sets for the new vertex, as sorted vertex lists in lexicographic
/// order of their characteristic vectors read from vertex 0.
fn neighbor_sets(p: &Graph, spec: &EnumSpec) -> Vec<Vec<usize>> {
    let n = p.n();
    // vertices too close to a chosen one: a new cycle through the added
    // vertex has length dist(a, b) + 2
    let blocked: Vec<VertexSet> = (0..n)
        .map(|a| {
            let dist = p.distances_from(a);
            (0..n)
                .filter(|&b| spec.min_girth >= 4 && dist[b].is_some_and(|d| d + 2 < spec.min_girth))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, allowed: &VertexSet, blocked: &[VertexSet], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for v in allowed.iter().filter(|&v| v >= start) {
            cur.push(v);
            rec(v + 1, &allowed.difference(&blocked[v]), blocked, cur, out);
            cur.pop();
        }
    }
    rec(0, &p.vertex_set(), &blocked, &mut cur, &mut out);
    if spec.connected {
        out.retain(|s| !s.is_empty());
    }
    out
}

fn is_cut_vertex(g: &Graph, v: usize) -> bool {
    let mut rest = g.vertex_set();
    rest.remove(v);
    !g.induces_connected(&rest)
}

fn invariant(g: &Graph, v: usize) -> (usize, usize) {
    let nd = g.neighbors(v).iter().map(|w| g.degree(w)).sum();
    (g.degree(v), nd)
}

/// Accepts `c` iff its last vertex is equivalent to the canonical deletion
/// vertex; returns the canonical form for deduplication.
fn accept(c: &Graph, connected: bool) -> Option<CanonicalForm> {
    let x = c.n() - 1;
    let eligible: Vec<usize> = (0..c.n()).filter(|&v| !connected || !is_cut_vertex(c, v)).collect();
    if !eligible.contains(&x) {
        return None;
    }
    let best = eligible.iter().map(|&v| invariant(c, v)).max()?;
    if invariant(c, x) != best {
        return None;
    }
    let ties: Vec<usize> = eligible.into_iter().filter(|&v| invariant(c, v) == best).collect();
    let labeling = canon::canonical_labeling(c);
    if ties.len() > 1 {
        let pos = labeling.positions();
        let m = *ties.iter().max_by_key(|&&v| pos[v]).unwrap();
        if m != x && !canon::same_orbit(c, x, m) {
            return None;
        }
    }
    Some(labeling.form)
}

fn children(p: &Graph, spec: &EnumSpec) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in neighbor_sets(p, spec) {
        let c = p
            .with_new_vertex(&VertexSet::from_slice(p.n(), &s))
            .expect("neighbors are in range");
        if let Some(form) = accept(&c, spec.connected) {
            if seen.insert(form) {
                out.push(c);
            }
        }
    }
    out
}

/// All graphs on `1..=max_n` vertices up to isomorphism, optionally only the
/// connected ones.
pub fn enumerate_graphs(max_n: usize, connected: bool, exec: Executor) -> Enumerator {
    Enumerator::new(
        EnumSpec {
            max_n,
            min_girth: 0,
            connected,
        },
        exec,
    )
}

/// Connected graphs with girth at least `min_girth` on `1..=max_n` vertices.
pub fn enumerate_min_girth(max_n: usize, min_girth: usize, exec: Executor) -> Enumerator {
    Enumerator::new(
        EnumSpec {
            max_n,
            min_girth,
            connected: true,
        },
        exec,
    )
}

/// Connected graphs of girth at least 5 on at most `max_n` vertices, each
/// once up to isomorphism. `max_n` must lie in `5..=12`.
pub fn enumerate_girth5(max_n: usize) -> Result<Enumerator> {
    enumerate_girth5_with(max_n, false, Executor::sequential())
}

/// Like [`enumerate_girth5`]; `allow_large` lifts the upper guard with a
/// warning.
pub fn enumerate_girth5_with(max_n: usize, allow_large: bool, exec: Executor) -> Result<Enumerator> {
    if max_n < 5 {
        return Err(Error::InvalidParameter(format!(
            "max_n must be at least 5, got {max_n}"
        )));
    }
    if max_n > GIRTH5_GUARD {
        if !allow_large {
            return Err(Error::InvalidParameter(format!(
                "max_n {max_n} exceeds the guard of {GIRTH5_GUARD}; opt in to go higher"
            )));
        }
        log::warn!("enumerating girth-5 graphs up to {max_n} vertices may take very long");
    }
    Ok(enumerate_min_girth(max_n, 5, exec))
}
