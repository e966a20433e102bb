use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cycles::{girth, Girth};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::connectivity::is_k_connected;
use super::patterns::PatternEmbedding;

/// A path meeting the host set `H` exactly at its two endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarWitness {
    pub path: Vec<usize>,
    pub attachments: (usize, usize),
    pub host: VertexSet,
}

impl EarWitness {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.path.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn interior(&self) -> &[usize] {
        if self.path.len() < 2 {
            return &[];
        }
        &self.path[1..self.path.len() - 1]
    }

    /// Checks that the path is an induced ear with nonadjacent attachments
    /// and that every other edge from its interior into the host ends at a
    /// common host neighbor of both attachments.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let p = &self.path;
        if p.len() < 3 {
            return Err("an ear with nonadjacent attachments needs an interior".into());
        }
        if p.iter().any(|&v| v >= g.n()) {
            return Err("vertex out of range".into());
        }
        let (x, y) = (p[0], p[p.len() - 1]);
        if self.attachments != (x, y) {
            return Err("attachments are not the path endpoints".into());
        }
        if !self.host.contains(x) || !self.host.contains(y) {
            return Err("an attachment lies outside the host".into());
        }
        if g.has_edge(x, y) {
            return Err("attachments are adjacent".into());
        }
        let set = VertexSet::from_slice(g.n(), p);
        if set.len() != p.len() {
            return Err("path repeats a vertex".into());
        }
        for (i, &a) in p.iter().enumerate() {
            for (j, &b) in p.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) != (j == i + 1) {
                    return Err(format!("path is not induced at ({a}, {b})"));
                }
            }
        }
        let common = g.neighbors(x).intersection(g.neighbors(y)).intersection(&self.host);
        for &v in self.interior() {
            if self.host.contains(v) {
                return Err(format!("interior vertex {v} lies in the host"));
            }
            for h in g.neighbors(v).intersection(&self.host).iter() {
                let path_edge = (h == x && v == p[1]) || (h == y && v == p[p.len() - 2]);
                if !path_edge && !common.contains(h) {
                    return Err(format!("edge ({v}, {h}) breaks the strong condition"));
                }
            }
        }
        Ok(())
    }

    pub fn is_strong(&self, g: &Graph) -> bool {
        self.verify(g).is_ok()
    }
}

/// A shortest path between two nonadjacent host vertices whose interior
/// avoids the host. Ties go to the least pair of attachments. No hypotheses
/// are checked.
pub fn shortest_ear(g: &Graph, h: &VertexSet) -> Result<Option<EarWitness>> {
    g.check_set(h)?;
    let n = g.n();
    let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
    for a in h.iter() {
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        parent[a] = a;
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v != a && h.contains(v) {
                continue;
            }
            for w in g.neighbors(v).iter() {
                if dist[w] != usize::MAX || (v == a && h.contains(w)) {
                    continue;
                }
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
        for b in h
            .iter()
            .filter(|&b| b > a && !g.has_edge(a, b) && dist[b] != usize::MAX)
        {
            let key = (dist[b], a, b);
            if best.as_ref().is_none_or(|(d, x, y, _)| key < (*d, *x, *y)) {
                let mut path = vec![b];
                let mut v = b;
                while v != a {
                    v = parent[v];
                    path.push(v);
                }
                path.reverse();
                best = Some((dist[b], a, b, path));
            }
        }
    }
    Ok(best.map(|(_, a, b, path)| EarWitness {
        path,
        attachments: (a, b),
        host: h.clone(),
    }))
}

/// Checks the hypotheses of the ear-existence statement on `(g, h)` and
/// returns a shortest ear between nonadjacent host vertices. `Ok(None)`
/// under verified hypotheses is a counterexample.
pub fn find_strong_ear(g: &Graph, h: &VertexSet) -> Result<Option<EarWitness>> {
    g.check_set(h)?;
    if h.len() < 3 {
        return Err(Error::HypothesisViolated("host has fewer than 3 vertices".into()));
    }
    if h.len() == g.n() {
        return Err(Error::HypothesisViolated("host is not a proper subgraph".into()));
    }
    if !is_k_connected(g, 3) {
        return Err(Error::HypothesisViolated("graph is not 3-connected".into()));
    }
    if matches!(girth(g), Girth::Finite(3)) {
        return Err(Error::HypothesisViolated("graph has a triangle".into()));
    }
    let outside = g.vertex_set().difference(h);
    if let Some(v) = outside.iter().find(|&v| g.neighbors(v).intersection_len(h) > 1) {
        return Err(Error::HypothesisViolated(format!(
            "vertex {v} has more than one neighbor in the host"
        )));
    }
    shortest_ear(g, h)
}

/// Length-3 strong ears of an embedded theta-plus attached at
/// `{v_i, v_{i+2}}` for odd `i` (indices mod 8), in pattern labels.
pub fn bad_ears(g: &Graph, emb: &PatternEmbedding) -> Result<Vec<EarWitness>> {
    let pattern = crate::named::theta_plus();
    emb.verify(g, &pattern)
        .map_err(|e| Error::InvalidEmbedding(format!("not a theta-plus embedding: {e}")))?;
    let host = VertexSet::from_slice(g.n(), &emb.map);
    let mut out = Vec::new();
    for i in [1, 3, 5, 7] {
        let (a, b) = (emb.map[i], emb.map[(i + 2) % 8]);
        let (a, b) = (a.min(b), a.max(b));
        for x in g.neighbors(a).difference(&host).iter() {
            for y in g.neighbors(x).intersection(g.neighbors(b)).difference(&host).iter() {
                let ear = EarWitness {
                    path: vec![a, x, y, b],
                    attachments: (a, b),
                    host: host.clone(),
                };
                if ear.is_strong(g) {
                    out.push(ear);
                }
            }
        }
    }
    Ok(out)
}
