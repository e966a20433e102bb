//! Girth, chordless cycles, odd holes and family membership.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Length of a shortest cycle. Forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// A chordless cycle, stored in canonical orientation: it starts at its
/// least vertex and the second vertex is smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HoleWitness {
    vertices: Vec<usize>,
}

impl HoleWitness {
    /// Wraps a cyclic vertex sequence, normalizing its rotation and
    /// direction. Does not check the graph.
    pub fn new(cycle: &[usize]) -> Self {
        HoleWitness {
            vertices: canonical_rotation(cycle),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_slice(n, &self.vertices)
    }

    /// Cycle edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Checks the witness against `g`: distinct vertices, consecutive ones
    /// adjacent, no chords.
    pub fn verify(&self, g: &Graph) -> bool {
        is_chordless_cycle(g, &self.vertices)
    }
}

/// Independent check that `cycle` is an induced cycle of `g` (length >= 3).
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set = VertexSet::from_slice(g.n(), cycle);
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        let v = cycle[i];
        let inside = g.neighbors(v).intersection(&set);
        inside.len() == 2 && inside.contains(cycle[(i + 1) % k]) && inside.contains(cycle[(i + k - 1) % k])
    })
}

fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    if k == 0 {
        return Vec::new();
    }
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| cycle[(start + k - i) % k]).collect();
    fwd.min(bwd)
}

pub fn girth(g: &Graph) -> Girth {
    match shortest_cycle(g) {
        Some(c) => Girth::Finite(c.len()),
        None => Girth::Infinite,
    }
}

/// A shortest cycle, found by one BFS per root. At the minimizing root the
/// two tree paths are disjoint, so the witness is a simple cycle.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut closing: Option<(usize, usize, usize)> = None;
        while let Some(x) = queue.pop_front() {
            let bound = closing
                .map(|c| c.0)
                .or(best.as_ref().map(Vec::len))
                .unwrap_or(usize::MAX);
            if 2 * dist[x] + 1 >= bound {
                break;
            }
            for y in g.neighbors(x).iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if closing.is_none_or(|c| len < c.0) && best.as_ref().is_none_or(|b| len < b.len()) {
                        closing = Some((len, x, y));
                    }
                }
            }
        }
        if let Some((len, x, y)) = closing {
            let walk_up = |mut v: usize| {
                let mut p = vec![v];
                while v != root {
                    v = parent[v];
                    p.push(v);
                }
                p
            };
            let mut cycle = walk_up(x);
            cycle.reverse();
            let mut tail = walk_up(y);
            tail.pop();
            cycle.extend(tail);
            if cycle.len() == len && VertexSet::from_slice(n, &cycle).len() == len {
                best = Some(cycle);
            }
        }
    }
    best
}

/// Which cycle lengths to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Any,
    Odd,
    Even,
}

impl Parity {
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => len % 2 == 1,
            Parity::Even => len.is_multiple_of(2),
        }
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(Parity::Any),
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(Error::InvalidParameter(format!("unknown parity `{other}`"))),
        }
    }
}

/// Lazy enumeration of chordless cycles by induced-path extension from the
/// least vertex of each cycle.
pub struct ChordlessCycles<'a> {
    g: &'a Graph,
    min_len: usize,
    max_len: usize,
    parity: Parity,
    anchor: usize,
    path: Vec<usize>,
    frames: Vec<(Vec<usize>, usize)>,
}

impl<'a> ChordlessCycles<'a> {
    fn new(g: &'a Graph, min_len: usize, max_len: usize, parity: Parity) -> Self {
        ChordlessCycles {
            g,
            min_len,
            max_len,
            parity,
            anchor: 0,
            path: Vec::new(),
            frames: Vec::new(),
        }
    }

    fn candidates(&self) -> Vec<usize> {
        let a = self.path[0];
        let last = *self.path.last().unwrap();
        let mut blocked = VertexSet::from_slice(self.g.n(), &self.path);
        if self.path.len() > 2 {
            for &p in &self.path[1..self.path.len() - 1] {
                blocked.union_with(self.g.neighbors(p));
            }
        }
        self.g
            .neighbors(last)
            .difference(&blocked)
            .iter()
            .filter(|&w| w > a)
            .collect()
    }
}

impl Iterator for ChordlessCycles<'_> {
    type Item = HoleWitness;

    fn next(&mut self) -> Option<HoleWitness> {
        loop {
            if self.path.is_empty() {
                if self.anchor >= self.g.n() || self.max_len < 3 {
                    return None;
                }
                self.path.push(self.anchor);
                self.anchor += 1;
                let c = self.candidates();
                self.frames.push((c, 0));
                continue;
            }
            let frame = self.frames.last_mut().unwrap();
            if frame.1 >= frame.0.len() {
                self.frames.pop();
                self.path.pop();
                continue;
            }
            let w = frame.0[frame.1];
            frame.1 += 1;
            let a = self.path[0];
            if self.path.len() >= 2 && self.g.has_edge(w, a) {
                let len = self.path.len() + 1;
                if self.path[1] < w && len >= self.min_len && len <= self.max_len && self.parity.admits(len) {
                    let mut cycle = self.path.clone();
                    cycle.push(w);
                    return Some(HoleWitness { vertices: cycle });
                }
                continue;
            }
            if self.path.len() + 2 <= self.max_len {
                self.path.push(w);
                let c = self.candidates();
                self.frames.push((c, 0));
            }
        }
    }
}

/// Every chordless cycle with length in `[min_len, max_len]` and the given
/// parity, each exactly once in canonical orientation.
pub fn enumerate_chordless_cycles(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    parity: Parity,
) -> Result<ChordlessCycles<'_>> {
    if min_len < 4 || min_len > max_len || max_len > g.n() {
        return Err(Error::InvalidParameter(format!(
            "cycle window [{min_len}, {max_len}] must satisfy 4 <= min <= max <= n = {}",
            g.n()
        )));
    }
    Ok(ChordlessCycles::new(g, min_len, max_len, parity))
}

/// Like [`enumerate_chordless_cycles`] but allows triangles and clamps the
/// window to the graph order.
pub fn chordless_cycles(g: &Graph, min_len: usize, max_len: usize, parity: Parity) -> ChordlessCycles<'_> {
    ChordlessCycles::new(g, min_len.max(3), max_len.min(g.n()), parity)
}

/// Some chordless odd cycle of length at least `k`, if one exists.
pub fn find_odd_hole_at_least(g: &Graph, k: usize) -> Result<Option<HoleWitness>> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "odd-hole threshold must be odd and >= 5, got {k}"
        )));
    }
    Ok(chordless_cycles(g, k, g.n(), Parity::Odd).next())
}

/// Why a graph failed a membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipViolation {
    /// The girth differs from `2 ell + 1`; carries a shortest cycle if any.
    Girth { girth: Girth, cycle: Option<Vec<usize>> },
    /// An odd hole of length at least `2 ell + 3`.
    LongOddHole(HoleWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub member: bool,
    pub ell: usize,
    pub girth: Girth,
    pub violation: Option<MembershipViolation>,
}

/// Membership in the family of graphs with girth exactly `2 ell + 1` and no
/// odd hole of length at least `2 ell + 3`.
pub fn is_member(g: &Graph, ell: usize) -> Result<MembershipVerdict> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell must be >= 2, got {ell}")));
    }
    let cycle = shortest_cycle(g);
    let girth = cycle.as_ref().map_or(Girth::Infinite, |c| Girth::Finite(c.len()));
    let violation = if girth != Girth::Finite(2 * ell + 1) {
        Some(MembershipViolation::Girth { girth, cycle })
    } else {
        find_odd_hole_at_least(g, 2 * ell + 3)?.map(MembershipViolation::LongOddHole)
    };
    Ok(MembershipVerdict {
        member: violation.is_none(),
        ell,
        girth,
        violation,
    })
}

/// The `ell` for which `g` is a member, if any. Girth fixes the candidate.
pub fn family_parameter(g: &Graph) -> Option<usize> {
    let girth = girth(g).finite()?;
    if girth < 5 || girth % 2 == 0 {
        return None;
    }
    let ell = (girth - 1) / 2;
    let hole = find_odd_hole_at_least(g, 2 * ell + 3).expect("valid threshold");
    hole.is_none().then_some(ell)
}

/// Exact clique number by branch and bound over bitsets.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, mut cand: VertexSet, size: usize, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        while let Some(v) = cand.first() {
            if size + cand.len() <= *best {
                return;
            }
            expand(g, cand.intersection(g.neighbors(v)), size + 1, best);
            cand.remove(v);
        }
    }
    let mut best = 0;
    expand(g, g.vertex_set(), 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn lengths(g: &Graph, min: usize, max: usize, parity: Parity) -> Vec<usize> {
        let mut v: Vec<_> = enumerate_chordless_cycles(g, min, max, parity)
            .unwrap()
            .map(|h| h.len())
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(5)), Girth::Finite(5));
        assert_eq!(girth(&named::petersen()), Girth::Finite(5));
        let tree = Graph::from_edge_list(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(girth(&tree), Girth::Infinite);
        assert_eq!(girth(&Graph::complete(4)), Girth::Finite(3));
        assert!(Girth::Finite(100) < Girth::Infinite);
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        for g in [
            named::petersen(),
            named::theta_plus(),
            Graph::cycle(9),
            Graph::complete(5),
        ] {
            let c = shortest_cycle(&g).unwrap();
            assert!(is_chordless_cycle(&g, &c), "{c:?}");
        }
    }

    #[test]
    fn petersen_chordless_cycles() {
        // multiplicities confirmed by the subset oracle in tests/oracles.rs
        let l = lengths(&named::petersen(), 4, 10, Parity::Any);
        assert_eq!(l.iter().filter(|&&x| x == 5).count(), 12);
        assert_eq!(l.iter().filter(|&&x| x == 6).count(), 10);
        assert_eq!(l.len(), 22);
    }

    #[test]
    fn c7_has_one_odd_cycle() {
        assert_eq!(lengths(&Graph::cycle(7), 4, 7, Parity::Odd), vec![7]);
    }

    #[test]
    fn theta_plus_odd_cycles_are_fives() {
        let l = lengths(&named::theta_plus(), 4, 8, Parity::Odd);
        assert!(!l.is_empty());
        assert!(l.iter().all(|&x| x == 5));
    }

    #[test]
    fn witnesses_are_canonical_and_valid() {
        let g = named::petersen();
        for h in enumerate_chordless_cycles(&g, 4, 10, Parity::Any).unwrap() {
            assert!(h.verify(&g));
            assert_eq!(HoleWitness::new(h.vertices()), h);
            let v = h.vertices();
            assert_eq!(v[0], *v.iter().min().unwrap());
            assert!(v[1] < v[v.len() - 1]);
        }
    }

    #[test]
    fn window_preconditions() {
        let g = Graph::cycle(5);
        assert!(enumerate_chordless_cycles(&g, 3, 5, Parity::Any).is_err());
        assert!(enumerate_chordless_cycles(&g, 5, 4, Parity::Any).is_err());
        assert!(enumerate_chordless_cycles(&g, 4, 6, Parity::Any).is_err());
    }

    #[test]
    fn odd_hole_search() {
        let h = find_odd_hole_at_least(&Graph::cycle(7), 7).unwrap().unwrap();
        assert_eq!(h.vertices(), &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(find_odd_hole_at_least(&named::petersen(), 7).unwrap(), None);
        assert_eq!(find_odd_hole_at_least(&Graph::cycle(5), 7).unwrap(), None);
        assert!(find_odd_hole_at_least(&Graph::cycle(5), 6).is_err());
    }

    #[test]
    fn membership() {
        let v = is_member(&named::petersen(), 2).unwrap();
        assert!(v.member);
        assert_eq!(v.girth, Girth::Finite(5));
        assert!(is_member(&Graph::cycle(7), 3).unwrap().member);
        let bad = is_member(&Graph::cycle(7), 2).unwrap();
        assert!(!bad.member);
        assert!(matches!(
            bad.violation,
            Some(MembershipViolation::Girth {
                girth: Girth::Finite(7),
                ..
            })
        ));
        // C5 plus a disjoint C7: girth 5 but a long odd hole
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..7).map(|i| (5 + i, 5 + (i + 1) % 7)));
        let g = Graph::from_edge_list(12, &edges).unwrap();
        let v = is_member(&g, 2).unwrap();
        assert!(matches!(v.violation, Some(MembershipViolation::LongOddHole(ref h)) if h.len() == 7));
        assert!(is_member(&g, 1).is_err());
        assert_eq!(family_parameter(&named::petersen()), Some(2));
        assert_eq!(family_parameter(&Graph::cycle(9)), Some(4));
        assert_eq!(family_parameter(&Graph::cycle(6)), None);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&named::petersen()), 2);
        assert_eq!(clique_number(&Graph::empty(1)), 1);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::complete(5)), 5);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
    }
}
