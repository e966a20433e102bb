use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::canon;
use crate::cycles::{chordless_cycles, HoleWitness, Parity};
use crate::graph::Graph;
use crate::named::{self, PatternName};

/// An induced embedding: pattern vertex `i` maps to host vertex `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternEmbedding {
    pub pattern_name: PatternName,
    pub map: Vec<usize>,
}

impl PatternEmbedding {
    /// Pairwise check that `map` is injective and preserves adjacency and
    /// non-adjacency.
    pub fn verify(&self, g: &Graph, pattern: &Graph) -> std::result::Result<(), String> {
        if self.map.len() != pattern.n() {
            return Err(format!(
                "map has {} entries for {} pattern vertices",
                self.map.len(),
                pattern.n()
            ));
        }
        if let Some(&v) = self.map.iter().find(|&&v| v >= g.n()) {
            return Err(format!("host vertex {v} out of range"));
        }
        for i in 0..pattern.n() {
            for j in i + 1..pattern.n() {
                let (a, b) = (self.map[i], self.map[j]);
                if a == b {
                    return Err(format!("pattern vertices {i} and {j} share host vertex {a}"));
                }
                if pattern.has_edge(i, j) != g.has_edge(a, b) {
                    return Err(format!("adjacency of pattern pair ({i}, {j}) is not preserved"));
                }
            }
        }
        Ok(())
    }
}

fn all_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.n()).map(|v| g.distances_from(v)).collect()
}

struct Matcher<'a> {
    g: &'a Graph,
    p: &'a Graph,
    order: Vec<usize>,
    g_dist: Vec<Vec<Option<usize>>>,
    p_dist: Vec<Vec<Option<usize>>>,
    map: Vec<usize>,
    used: VertexSet,
}

impl Matcher<'_> {
    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let pv = self.order[depth];
        let mut cand = self.g.vertex_set().difference(&self.used);
        for &q in &self.order[..depth] {
            let hq = self.map[q];
            if self.p.has_edge(pv, q) {
                cand.intersect_with(self.g.neighbors(hq));
            } else {
                cand.difference_with(self.g.neighbors(hq));
            }
        }
        for c in cand.iter() {
            if self.g.degree(c) < self.p.degree(pv) {
                continue;
            }
            // host distances can only shrink under an embedding
            let far = self.order[..depth].iter().any(|&q| match self.p_dist[pv][q] {
                Some(dp) => self.g_dist[c][self.map[q]].is_none_or(|dg| dg > dp),
                None => false,
            });
            if far {
                continue;
            }
            self.map[pv] = c;
            self.used.insert(c);
            if self.search(depth + 1) {
                return true;
            }
            self.used.remove(c);
        }
        false
    }
}

/// First induced embedding of `pattern` in `g`, trying pattern vertices by
/// descending degree and host vertices in ascending order.
pub fn find_induced_pattern(g: &Graph, pattern: &Graph) -> Option<PatternEmbedding> {
    find_map(g, pattern).map(|map| PatternEmbedding {
        pattern_name: PatternName::Custom,
        map,
    })
}

pub fn find_named_pattern(g: &Graph, name: PatternName) -> Option<PatternEmbedding> {
    let pattern = name.graph()?;
    find_map(g, &pattern).map(|map| PatternEmbedding {
        pattern_name: name,
        map,
    })
}

fn find_map(g: &Graph, p: &Graph) -> Option<Vec<usize>> {
    if p.n() > g.n() || p.edge_count() > g.edge_count() {
        return None;
    }
    let mut order: Vec<usize> = (0..p.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(p.degree(v)), v));
    let mut m = Matcher {
        g,
        p,
        order,
        g_dist: all_distances(g),
        p_dist: all_distances(p),
        map: vec![usize::MAX; p.n()],
        used: VertexSet::new(g.n()),
    };
    m.search(0).then_some(m.map)
}

pub fn is_isomorphic_to_petersen(g: &Graph) -> bool {
    g.n() == 10 && g.edge_count() == 15 && canon::is_isomorphic(g, &named::petersen())
}

/// Two distinct 5-holes with a common edge, found by scanning the 5-holes in
/// enumeration order against an edge index.
pub fn five_cycles_sharing_edge(g: &Graph) -> Option<(HoleWitness, HoleWitness)> {
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut holes = Vec::new();
    for hole in chordless_cycles(g, 5, 5, Parity::Any) {
        if let Some(i) = hole.edges().iter().find_map(|e| seen.get(e).copied()) {
            return Some((holes.swap_remove(i), hole));
        }
        for e in hole.edges() {
            seen.insert(e, holes.len());
        }
        holes.push(hole);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_induces_its_relatives() {
        let p = named::petersen();
        for name in [
            PatternName::ThetaPlus,
            PatternName::ThetaMinus,
            PatternName::PMinus,
            PatternName::Petersen,
        ] {
            let pattern = name.graph().unwrap();
            let emb = find_named_pattern(&p, name).unwrap_or_else(|| panic!("{name} missing"));
            assert!(emb.verify(&p, &pattern).is_ok());
        }
        // deleting two nonadjacent vertices leaves a degree-1 vertex
        assert!(find_named_pattern(&p, PatternName::Theta).is_none());
    }

    #[test]
    fn theta_plus_does_not_induce_theta() {
        assert!(find_named_pattern(&named::theta_plus(), PatternName::Theta).is_none());
        assert!(find_named_pattern(&Graph::cycle(5), PatternName::ThetaMinus).is_none());
    }

    #[test]
    fn petersen_recognition() {
        assert!(is_isomorphic_to_petersen(&named::petersen()));
        let relabeled = named::petersen().relabel(&[3, 7, 1, 0, 9, 2, 8, 4, 6, 5]);
        assert!(is_isomorphic_to_petersen(&relabeled));
        assert!(!is_isomorphic_to_petersen(&named::theta_plus()));
    }

    #[test]
    fn sharing_five_cycles() {
        let (a, b) = five_cycles_sharing_edge(&named::theta_plus()).unwrap();
        assert_eq!(a.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(b.vertices(), &[0, 1, 2, 6, 7]);
        assert!(five_cycles_sharing_edge(&Graph::cycle(5)).is_none());
        let (a, b) = five_cycles_sharing_edge(&named::petersen()).unwrap();
        assert_ne!(a, b);
        assert!(a.edges().iter().any(|e| b.edges().contains(e)));
    }
}
