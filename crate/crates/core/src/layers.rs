//! Distance layers `L_i(S)`, their bipartiteness, and the layered
//! 4-coloring.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::coloring::Coloring;
use crate::cycles::{self, MembershipViolation};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A proper 2-coloring of one layer. Each component's least vertex is on
/// side 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub sides: [VertexSet; 2],
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> Option<usize> {
        (0..2).find(|&s| self.sides[s].contains(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LayerParity {
    Bipartite(Bipartition),
    /// An odd cycle inside the layer, in cycle order.
    NonBipartite {
        odd_cycle: Vec<usize>,
    },
}

impl LayerParity {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, LayerParity::Bipartite(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerDecomposition {
    pub source: VertexSet,
    /// `layers[i]` holds the vertices at distance exactly `i` from the source.
    pub layers: Vec<VertexSet>,
    pub parity: Vec<LayerParity>,
    /// Vertices at infinite distance.
    pub unreached: VertexSet,
}

impl LayerDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(VertexSet::len).collect()
    }

    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(v))
    }

    pub fn bipartition(&self, i: usize) -> Option<&Bipartition> {
        match self.parity.get(i)? {
            LayerParity::Bipartite(b) => Some(b),
            LayerParity::NonBipartite { .. } => None,
        }
    }

    pub fn odd_cycle(&self, i: usize) -> Option<&[usize]> {
        match self.parity.get(i)? {
            LayerParity::Bipartite(_) => None,
            LayerParity::NonBipartite { odd_cycle } => Some(odd_cycle),
        }
    }
}

/// BFS 2-coloring of `G[within]`, components rooted at their least vertex.
pub fn two_color_within(g: &Graph, within: &VertexSet) -> LayerParity {
    let n = g.n();
    let mut side = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut sides = [VertexSet::new(n), VertexSet::new(n)];
    for root in within.iter() {
        if side[root] != usize::MAX {
            continue;
        }
        side[root] = 0;
        parent[root] = root;
        sides[0].insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v).intersection(within).iter() {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    sides[side[w]].insert(w);
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return LayerParity::NonBipartite {
                        odd_cycle: tree_cycle(&parent, v, w),
                    };
                }
            }
        }
    }
    LayerParity::Bipartite(Bipartition { sides })
}

/// The cycle closed by the non-tree edge `ab` in a BFS forest.
fn tree_cycle(parent: &[usize], a: usize, b: usize) -> Vec<usize> {
    let up = |mut v: usize| {
        let mut chain = vec![v];
        while parent[v] != v {
            v = parent[v];
            chain.push(v);
        }
        chain
    };
    let (pa, pb) = (up(a), up(b));
    let mut common = 0;
    while common < pa.len().min(pb.len()) && pa[pa.len() - 1 - common] == pb[pb.len() - 1 - common] {
        common += 1;
    }
    // pa[..=ia] runs from a up to the lowest common ancestor
    let ia = pa.len() - common;
    let ib = pb.len() - common;
    let mut cycle: Vec<usize> = pa[..=ia].to_vec();
    cycle.extend(pb[..ib].iter().rev());
    cycle
}

/// Multi-source BFS layering from `s`.
pub fn decompose(g: &Graph, s: &VertexSet) -> Result<LayerDecomposition> {
    if s.is_empty() {
        return Err(Error::EmptySource);
    }
    g.check_set(s)?;
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in s.iter() {
        dist[v] = 0;
        queue.push_back(v);
    }
    let mut layers = vec![s.clone()];
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v).iter() {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                if layers.len() <= dist[w] {
                    layers.push(VertexSet::new(n));
                }
                layers[dist[w]].insert(w);
                queue.push_back(w);
            }
        }
    }
    let unreached = (0..n).filter(|&v| dist[v] == usize::MAX).collect();
    let parity = layers.iter().map(|l| two_color_within(g, l)).collect();
    Ok(LayerDecomposition {
        source: s.clone(),
        layers,
        parity,
        unreached,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LayerTheoremVerdict {
    /// Some layer `1 <= i <= ell / 2` is not bipartite.
    HypothesisFails {
        layer: usize,
        odd_cycle: Vec<usize>,
    },
    ConclusionHolds,
    /// The hypothesis holds but a deeper layer is not bipartite.
    TheoremViolated {
        layer: usize,
        odd_cycle: Vec<usize>,
    },
}

fn require_member(g: &Graph, ell: usize) -> Result<()> {
    let verdict = cycles::is_member(g, ell)?;
    match verdict.violation {
        None => Ok(()),
        Some(MembershipViolation::Girth { girth, .. }) => Err(Error::NotInFamily {
            ell,
            reason: format!("girth is {girth}, expected {}", 2 * ell + 1),
        }),
        Some(MembershipViolation::LongOddHole(h)) => Err(Error::NotInFamily {
            ell,
            reason: format!("odd hole of length {} at {:?}", h.len(), h.vertices()),
        }),
    }
}

/// Checks that bipartite layers `1..=ell/2` force every layer to be
/// bipartite. Requires membership and a connected source.
pub fn check_layer_theorem(g: &Graph, s: &VertexSet, ell: usize) -> Result<LayerTheoremVerdict> {
    if s.is_empty() {
        return Err(Error::EmptySource);
    }
    g.check_set(s)?;
    require_member(g, ell)?;
    if !g.induces_connected(s) {
        return Err(Error::SourceNotConnected);
    }
    layer_theorem_unchecked(g, s, ell)
}

/// [`check_layer_theorem`] without the membership test.
pub(crate) fn layer_theorem_unchecked(g: &Graph, s: &VertexSet, ell: usize) -> Result<LayerTheoremVerdict> {
    let d = decompose(g, s)?;
    let bound = ell / 2;
    for (i, p) in d.parity.iter().enumerate().skip(1) {
        if let LayerParity::NonBipartite { odd_cycle } = p {
            let odd_cycle = odd_cycle.clone();
            return Ok(if i <= bound {
                LayerTheoremVerdict::HypothesisFails { layer: i, odd_cycle }
            } else {
                // a failing hypothesis layer would have been found first
                LayerTheoremVerdict::TheoremViolated { layer: i, odd_cycle }
            });
        }
    }
    Ok(LayerTheoremVerdict::ConclusionHolds)
}

/// Colors even layers of `L_i(u)` from `{1, 2}` and odd layers from
/// `{3, 4}` by their bipartitions.
pub fn layered_four_coloring(g: &Graph, u: usize, ell: usize) -> Result<Coloring> {
    g.check_vertex(u)?;
    require_member(g, ell)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    layered_unchecked(g, u)
}

pub(crate) fn layered_unchecked(g: &Graph, u: usize) -> Result<Coloring> {
    let d = decompose(g, &VertexSet::singleton(g.n(), u))?;
    if !d.unreached.is_empty() {
        return Err(Error::Disconnected);
    }
    let mut colors = vec![0; g.n()];
    for (i, p) in d.parity.iter().enumerate() {
        let LayerParity::Bipartite(b) = p else {
            return Err(Error::LayerNotBipartite { layer: i });
        };
        let base = if i % 2 == 0 { 1 } else { 3 };
        for (s, side) in b.sides.iter().enumerate() {
            for v in side.iter() {
                colors[v] = base + s;
            }
        }
    }
    let c = Coloring::new(colors)?;
    c.check(g)?;
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeDeletionVerdict {
    /// The edge lies on a `(2 ell + 1)`-cycle; nothing is claimed.
    InOddGirthCycle { cycle: Vec<usize> },
    /// The edge lies on no such cycle and `g - e` is still a member.
    ClosureHolds,
    /// The edge lies on no such cycle but `g - e` left the family.
    TheoremViolated { violation: MembershipViolation },
}

/// A cycle of exactly `len` vertices through the edge `uv`, not necessarily
/// chordless. Returned starting `u, v, ..`.
pub fn cycle_through_edge(g: &Graph, u: usize, v: usize, len: usize) -> Option<Vec<usize>> {
    if !g.has_edge(u, v) || len < 3 || len > g.n() {
        return None;
    }
    let h = g.without_edge(u, v).ok()?;
    let dist_u = h.distances_from(u);
    // a simple v-u path in h with exactly len - 1 edges
    let target = len - 1;
    let mut path = vec![v];
    let mut used = VertexSet::from_slice(g.n(), &[u, v]);

    fn extend(
        h: &Graph,
        u: usize,
        target: usize,
        dist_u: &[Option<usize>],
        path: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> bool {
        let last = *path.last().unwrap();
        let steps = path.len() - 1;
        let remaining = target - steps;
        if remaining == 1 {
            return h.has_edge(last, u);
        }
        for w in h.neighbors(last).iter() {
            if used.contains(w) {
                continue;
            }
            match dist_u[w] {
                Some(d) if d < remaining => {}
                _ => continue,
            }
            used.insert(w);
            path.push(w);
            if extend(h, u, target, dist_u, path, used) {
                return true;
            }
            path.pop();
            used.remove(w);
        }
        false
    }

    if extend(&h, u, target, &dist_u, &mut path, &mut used) {
        let mut cycle = vec![u];
        cycle.extend(path);
        Some(cycle)
    } else {
        None
    }
}

/// Deleting an edge on no `(2 ell + 1)`-cycle keeps the graph in the family.
pub fn edge_deletion_closure(g: &Graph, e: (usize, usize), ell: usize) -> Result<EdgeDeletionVerdict> {
    require_member(g, ell)?;
    edge_closure_unchecked(g, e, ell)
}

pub(crate) fn edge_closure_unchecked(g: &Graph, (u, v): (usize, usize), ell: usize) -> Result<EdgeDeletionVerdict> {
    let h = g.without_edge(u, v)?;
    if let Some(cycle) = cycle_through_edge(g, u, v, 2 * ell + 1) {
        return Ok(EdgeDeletionVerdict::InOddGirthCycle { cycle });
    }
    let verdict = cycles::is_member(&h, ell)?;
    Ok(match verdict.violation {
        None => EdgeDeletionVerdict::ClosureHolds,
        Some(violation) => EdgeDeletionVerdict::TheoremViolated { violation },
    })
}
