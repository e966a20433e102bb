//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell,
//! recurse. The canonical labeling is the leaf whose relabeled adjacency
//! matrix is lexicographically greatest. Automorphisms discovered at leaves
//! prune sibling subtrees (orbit pruning) and let the search jump back to
//! the first path as soon as a subtree is known to be equivalent to it.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// An isomorphism-invariant certificate. Two (vertex-colored) graphs are
/// isomorphic iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    cells: Vec<(usize, usize)>,
    bits: Vec<u64>,
}

/// A canonical labeling: `lab[i]` is the vertex placed at canonical
/// position `i`.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub lab: Vec<usize>,
    pub form: CanonicalForm,
}

impl Labeling {
    /// Inverse of `lab`: canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &vec![0; g.n()])
}

/// Canonical labeling of a vertex-colored graph. Color classes keep their
/// relative order (ascending color value) in the canonical labeling.
pub fn canonical_labeling_colored(g: &Graph, colors: &[usize]) -> Labeling {
    assert_eq!(colors.len(), g.n());
    let mut distinct: Vec<usize> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut cells: Vec<Vec<usize>> = distinct
        .iter()
        .map(|&c| (0..g.n()).filter(|&v| colors[v] == c).collect())
        .filter(|c: &Vec<usize>| !c.is_empty())
        .collect();
    let cell_sig: Vec<(usize, usize)> = distinct
        .iter()
        .zip(cells.iter())
        .map(|(&c, cell)| (c, cell.len()))
        .collect();
    refine(g, &mut cells);

    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.explore(cells, &mut Vec::new());
    let (lab, bits) = search.best.expect("search reaches at least one leaf");
    Labeling {
        lab,
        form: CanonicalForm {
            n: g.n(),
            cells: cell_sig,
            bits,
        },
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g).positions())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// True iff some automorphism of `g` maps `a` to `b`.
pub fn same_orbit(g: &Graph, a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    if g.degree(a) != g.degree(b) {
        return false;
    }
    let mark = |x: usize| {
        let mut c = vec![0; g.n()];
        c[x] = 1;
        c
    };
    canonical_labeling_colored(g, &mark(a)).form == canonical_labeling_colored(g, &mark(b)).form
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Every split depends only on cell order and neighbor counts, so the
/// result is label-invariant.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.n();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = VertexSet::from_slice(n, &cells[s]);
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            let mut split_any = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection_len(&splitter), v))
                    .collect();
                keyed.sort_unstable();
                if keyed.first().map(|k| k.0) == keyed.last().map(|k| k.0) {
                    next.push(cell.clone());
                    continue;
                }
                split_any = true;
                let mut i = 0;
                while i < keyed.len() {
                    let key = keyed[i].0;
                    let mut part = Vec::new();
                    while i < keyed.len() && keyed[i].0 == key {
                        part.push(keyed[i].1);
                        i += 1;
                    }
                    next.push(part);
                }
            }
            if split_any {
                *cells = next;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct FirstLeaf {
    lab: Vec<usize>,
    bits: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<FirstLeaf>,
    best: Option<(Vec<usize>, Vec<u64>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(k)` to unwind to the first-path node at depth `k`.
    fn explore(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let level = path.len();
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() {
                let orbits = self.orbits_fixing(path);
                let root = orbits.find(v);
                if explored.iter().any(|&w| orbits.find(w) == root) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.explore(child, path);
            path.pop();
            if let Some(k) = jump {
                if k < level {
                    return Some(k);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let bits = certificate(self.g, &lab);
        let Some(first) = &self.first else {
            self.best = Some((lab.clone(), bits.clone()));
            self.first = Some(FirstLeaf {
                lab,
                bits,
                path: path.to_vec(),
            });
            return None;
        };
        if bits == first.bits {
            let gamma = mapping(&first.lab, &lab);
            let common = first.path.iter().zip(path.iter()).take_while(|(a, b)| a == b).count();
            self.push_generator(gamma);
            return Some(common);
        }
        let (best_lab, best_bits) = self.best.as_ref().expect("best set with first");
        match bits.cmp(best_bits) {
            std::cmp::Ordering::Equal => {
                let gamma = mapping(best_lab, &lab);
                self.push_generator(gamma);
            }
            std::cmp::Ordering::Greater => self.best = Some((lab, bits)),
            std::cmp::Ordering::Less => {}
        }
        None
    }

    fn push_generator(&mut self, gamma: Vec<usize>) {
        if gamma.iter().enumerate().any(|(i, &x)| i != x) && !self.generators.contains(&gamma) {
            self.generators.push(gamma);
        }
    }

    fn orbits_fixing(&self, path: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.g.n());
        for gamma in &self.generators {
            if path.iter().all(|&p| gamma[p] == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to.iter()) {
        gamma[a] = b;
    }
    gamma
}

/// Upper-triangle adjacency bits of `g` in the order given by `lab`.
fn certificate(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    let mut k = 0;
    for i in 0..n {
        let row = g.neighbors(lab[i]);
        for &w in &lab[i + 1..] {
            if row.contains(w) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use proptest::prelude::*;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        g.relabel(&perm)
    }

    #[test]
    fn named_graphs_invariant_under_relabeling() {
        for g in [
            named::petersen(),
            named::theta_plus(),
            named::theta(),
            named::theta_minus(),
            named::p_minus(),
            Graph::cycle(7),
            Graph::complete(6),
            Graph::empty(5),
        ] {
            let f = canonical_form(&g);
            for seed in 0..20 {
                assert_eq!(canonical_form(&shuffled(&g, seed)), f);
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!is_isomorphic(&named::theta(), &named::theta_plus()));
        // C6 versus two disjoint triangles: same degree sequence
        let two_triangles = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&Graph::cycle(6), &two_triangles));
    }

    #[test]
    fn star_is_cheap() {
        let edges: Vec<_> = (1..40).map(|i| (0, i)).collect();
        let star = Graph::from_edge_list(40, &edges).unwrap();
        assert_eq!(canonical_form(&shuffled(&star, 3)), canonical_form(&star));
    }

    #[test]
    fn orbits() {
        let p = named::petersen();
        assert!((0..10).all(|v| same_orbit(&p, 0, v)));
        let tp = named::theta_plus();
        assert!(same_orbit(&tp, 0, 2));
        assert!(!same_orbit(&tp, 0, 1));
        let path = Graph::path(4);
        assert!(same_orbit(&path, 0, 3));
        assert!(!same_orbit(&path, 0, 1));
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = named::theta_minus();
        let c = canonical_graph(&g);
        assert_eq!(canonical_graph(&c), c);
        assert!(is_isomorphic(&g, &c));
    }

    proptest! {
        #[test]
        fn relabeling_preserves_form(bits in proptest::collection::vec(any::<bool>(), 36), seed in any::<u64>()) {
            let n = 9;
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            prop_assert_eq!(canonical_form(&shuffled(&g, seed)), canonical_form(&g));
        }
    }
}
