use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cycles::{is_chordless_cycle, HoleWitness};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex set whose removal leaves at least two nonempty components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutsetReport {
    pub cutset: VertexSet,
    pub stable: bool,
    pub component_count: usize,
    pub components: Vec<VertexSet>,
}

impl CutsetReport {
    /// Recomputes the components of `g - cutset` and compares.
    pub fn verify(&self, g: &Graph) -> bool {
        match cutset_report(g, &self.cutset) {
            Ok(Some(r)) => r == *self,
            _ => false,
        }
    }
}

/// The report for `x` if it is a cutset of `g`.
pub fn cutset_report(g: &Graph, x: &VertexSet) -> Result<Option<CutsetReport>> {
    g.check_set(x)?;
    let rest = g.vertex_set().difference(x);
    let components = g.components_within(&rest);
    if components.len() < 2 {
        return Ok(None);
    }
    Ok(Some(CutsetReport {
        cutset: x.clone(),
        stable: g.is_stable(x)?,
        component_count: components.len(),
        components,
    }))
}

/// Every cutset of exactly `size` vertices, in lexicographic order of the
/// sorted vertex lists.
pub fn enumerate_cutsets(g: &Graph, size: usize) -> impl Iterator<Item = CutsetReport> + '_ {
    let n = g.n();
    // fewer than size + 2 vertices cannot leave two nonempty sides
    let feasible = size >= 1 && n >= size + 2;
    (0..if feasible { n } else { 0 })
        .combinations(size)
        .filter_map(move |c| cutset_report(g, &VertexSet::from_slice(n, &c)).ok().flatten())
}

/// The first unstable cutset of the given size, if any.
pub fn first_unstable_cutset(g: &Graph, size: usize) -> Option<CutsetReport> {
    enumerate_cutsets(g, size).find(|r| !r.stable)
}

/// Every triple `T` of neighbors of `u` for which `{u} + T` is a cutset.
/// An empty result means the property holds at `u`.
pub fn neighborhood_cutset_check(g: &Graph, u: usize) -> Result<Vec<CutsetReport>> {
    g.check_vertex(u)?;
    let n = g.n();
    let mut out = Vec::new();
    for t in g.neighbors(u).iter().combinations(3) {
        let mut x = VertexSet::from_slice(n, &t);
        x.insert(u);
        if let Some(r) = cutset_report(g, &x)? {
            out.push(r);
        }
    }
    Ok(out)
}

/// Scans `{u_i, u_{i+1}, w}` for `i = 0..5` and `w` the other cycle
/// vertices in cycle order; returns the first cutset.
pub fn find_unstable_cutset_on_5cycle(g: &Graph, c: &HoleWitness) -> Result<Option<CutsetReport>> {
    let u = c.vertices();
    if u.len() != 5 {
        return Err(Error::NotAFiveHole(format!("length {}", u.len())));
    }
    if u.iter().any(|&v| v >= g.n()) || !is_chordless_cycle(g, u) {
        return Err(Error::NotAFiveHole(format!("{u:?} is not a chordless cycle")));
    }
    for i in 0..5 {
        let (a, b) = (u[i], u[(i + 1) % 5]);
        for &w in u.iter().filter(|&&w| w != a && w != b) {
            if let Some(r) = cutset_report(g, &VertexSet::from_slice(g.n(), &[a, b, w]))? {
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{chordless_cycles, Parity};
    use crate::named;

    #[test]
    fn petersen_three_cutsets_are_stable() {
        let p = named::petersen();
        let cuts: Vec<_> = enumerate_cutsets(&p, 3).collect();
        // exactly the ten neighborhoods
        assert_eq!(cuts.len(), 10);
        for r in &cuts {
            assert!(r.stable);
            assert!(r.verify(&p));
            assert_eq!(r.component_count, 2);
        }
    }

    #[test]
    fn c5_two_cutsets() {
        let g = Graph::cycle(5);
        let cuts: Vec<_> = enumerate_cutsets(&g, 2).collect();
        assert_eq!(cuts.len(), 5);
        for r in cuts {
            let v = r.cutset.to_vec();
            assert!(!g.has_edge(v[0], v[1]));
        }
    }

    #[test]
    fn complete_graph_has_no_cutsets() {
        assert_eq!(enumerate_cutsets(&Graph::complete(4), 3).count(), 0);
        assert_eq!(enumerate_cutsets(&Graph::cycle(5), 4).count(), 0);
    }

    #[test]
    fn neighborhood_check() {
        let p = named::petersen();
        for u in 0..10 {
            assert!(neighborhood_cutset_check(&p, u).unwrap().is_empty());
        }
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(neighborhood_cutset_check(&star, 0).unwrap().is_empty());
    }

    #[test]
    fn five_cycle_cutsets() {
        let p = named::petersen();
        for c in chordless_cycles(&p, 5, 5, Parity::Any) {
            assert_eq!(find_unstable_cutset_on_5cycle(&p, &c).unwrap(), None);
        }
        // C5 has five vertices, enough for a 3-cutset with two singleton sides
        let c5 = Graph::cycle(5);
        let h = HoleWitness::new(&[0, 1, 2, 3, 4]);
        let r = find_unstable_cutset_on_5cycle(&c5, &h).unwrap().unwrap();
        assert_eq!(r.cutset.to_vec(), vec![0, 1, 3]);
        assert_eq!(
            r.components,
            vec![VertexSet::singleton(5, 2), VertexSet::singleton(5, 4)]
        );
        // two 5-cycles sharing vertex 0
        let glued = Graph::from_edge_list(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 0),
            ],
        )
        .unwrap();
        let r = find_unstable_cutset_on_5cycle(&glued, &h).unwrap().unwrap();
        assert!(r.cutset.contains(0));
        assert!(!r.stable);
        assert_eq!(r.cutset.to_vec(), vec![0, 1, 2]);
        assert!(matches!(
            find_unstable_cutset_on_5cycle(&p, &HoleWitness::new(&[0, 1, 2, 3, 5])),
            Err(Error::NotAFiveHole(_))
        ));
    }
}
