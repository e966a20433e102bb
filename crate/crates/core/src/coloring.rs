//! Exact coloring, 4-critical membership, and Kempe chains.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cycles::{self, clique_number};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex coloring with colors `1, 2, ..`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    /// Wraps a color vector. Colors must be positive.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidParameter(format!("vertex {v} has color 0")));
        }
        Ok(Coloring { colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Largest color used (0 for the empty coloring).
    pub fn palette_size(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn class(&self, color: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .map(|(v, _)| v)
            .collect()
    }

    /// Errors with the first monochromatic edge, or on a size mismatch.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::ColoringSize {
                expected: g.n(),
                got: self.colors.len(),
            });
        }
        match g.edges().into_iter().find(|&(u, v)| self.colors[u] == self.colors[v]) {
            Some((u, v)) => Err(Error::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }
}

/// DSATUR backtracking over at most `k` colors. New colors are introduced
/// in order, which fixes the first vertex to color 1.
struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    nbr_count: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Dsatur {
            g,
            k,
            colors: vec![0; g.n()],
            nbr_count: vec![vec![0; k + 1]; g.n()],
            saturation: vec![0; g.n()],
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.n()).filter(|&v| self.colors[v] == 0).max_by(|&a, &b| {
            (self.saturation[a], self.g.degree(a))
                .cmp(&(self.saturation[b], self.g.degree(b)))
                .then(b.cmp(&a))
        })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for w in self.g.neighbors(v).iter() {
            let cnt = &mut self.nbr_count[w][c];
            if *cnt == 0 {
                self.saturation[w] += 1;
            }
            *cnt += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for w in self.g.neighbors(v).iter() {
            let cnt = &mut self.nbr_count[w][c];
            *cnt -= 1;
            if *cnt == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn search(&mut self, max_used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if self.saturation[v] >= self.k {
            return false;
        }
        for c in 1..=(max_used + 1).min(self.k) {
            if self.nbr_count[v][c] == 0 {
                self.assign(v, c);
                if self.search(max_used.max(c)) {
                    return true;
                }
                self.unassign(v);
            }
        }
        false
    }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    if g.n() == 0 {
        return Some(Coloring { colors: Vec::new() });
    }
    if k == 0 {
        return None;
    }
    let mut s = Dsatur::new(g, k);
    s.search(0).then_some(Coloring { colors: s.colors })
}

/// Exact chromatic number with a witness coloring using exactly that many
/// colors. The search starts at the clique number and climbs.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    if g.n() == 0 {
        return (0, Coloring { colors: Vec::new() });
    }
    let mut k = clique_number(g).max(1);
    loop {
        if let Some(c) = k_colorable(g, k) {
            debug_assert!(c.is_proper(g));
            return (k, c);
        }
        k += 1;
    }
}

/// Outcome of the 4-critical membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum G0Verdict {
    /// Not a member of the girth-5 family.
    NotInFamily,
    /// In the family, but the chromatic number is not 4.
    ChromaticNumber(usize),
    /// 4-chromatic, but deleting this edge keeps it 4-chromatic.
    NotCritical {
        edge: (usize, usize),
    },
    Member,
}

impl G0Verdict {
    pub fn is_member(&self) -> bool {
        matches!(self, G0Verdict::Member)
    }
}

/// Edge-criticality suffices: every proper subgraph lies inside some
/// `g - e` (or misses a vertex, hence an edge in a graph without isolated
/// vertices), and chromatic number is monotone under subgraphs.
pub fn is_in_g0(g: &Graph) -> G0Verdict {
    let member = cycles::is_member(g, 2).map(|v| v.member).unwrap_or(false);
    if !member {
        return G0Verdict::NotInFamily;
    }
    g0_given_membership(g, chromatic_number(g).0)
}

pub(crate) fn g0_given_membership(g: &Graph, chi: usize) -> G0Verdict {
    if chi != 4 {
        return G0Verdict::ChromaticNumber(chi);
    }
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        // an isolated vertex can be deleted without lowering chi
        let v = (0..g.n()).find(|&v| g.degree(v) == 0).unwrap();
        return G0Verdict::NotCritical { edge: (v, v) };
    }
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v).expect("edge present");
        if k_colorable(&h, 3).is_none() {
            return G0Verdict::NotCritical { edge: (u, v) };
        }
    }
    G0Verdict::Member
}

/// A request for an `(i, j)`-alternating path between `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempeQuery {
    pub coloring: Coloring,
    pub i: usize,
    pub j: usize,
    pub x: usize,
    pub y: usize,
}

fn check_query(g: &Graph, q: &KempeQuery) -> Result<()> {
    if q.i == q.j {
        return Err(Error::InvalidParameter("kempe colors must differ".into()));
    }
    if q.x == q.y {
        return Err(Error::InvalidParameter("kempe endpoints must differ".into()));
    }
    g.check_vertex(q.x)?;
    g.check_vertex(q.y)?;
    q.coloring.check(g)
}

/// Vertices reachable from `x` through vertices colored `i` or `j`, with
/// BFS parents.
fn kempe_bfs(g: &Graph, c: &Coloring, i: usize, j: usize, x: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; g.n()];
    if c.color(x) != i && c.color(x) != j {
        return parent;
    }
    parent[x] = Some(x);
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v).iter() {
            let cw = c.color(w);
            if parent[w].is_none() && (cw == i || cw == j) {
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    parent
}

/// A shortest `(i, j)`-alternating `x`-`y` path, if `x` and `y` lie in the
/// same component of the subgraph induced by color classes `i` and `j`.
pub fn kempe_path_exists(g: &Graph, q: &KempeQuery) -> Result<Option<Vec<usize>>> {
    check_query(g, q)?;
    let parent = kempe_bfs(g, &q.coloring, q.i, q.j, q.x);
    if parent[q.y].is_none() {
        return Ok(None);
    }
    let mut path = vec![q.y];
    let mut v = q.y;
    while v != q.x {
        v = parent[v].unwrap();
        path.push(v);
    }
    path.reverse();
    Ok(Some(path))
}

/// Swaps colors `i` and `j` on the `(i, j)`-component containing `x`. The
/// result is again proper.
pub fn kempe_swap(g: &Graph, c: &Coloring, i: usize, j: usize, x: usize) -> Result<Coloring> {
    if i == j || i == 0 || j == 0 {
        return Err(Error::InvalidParameter(
            "kempe colors must be distinct and positive".into(),
        ));
    }
    g.check_vertex(x)?;
    c.check(g)?;
    let parent = kempe_bfs(g, c, i, j, x);
    let mut colors = c.colors.clone();
    for (v, p) in parent.iter().enumerate() {
        if p.is_some() {
            colors[v] = if colors[v] == i { j } else { i };
        }
    }
    Ok(Coloring { colors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn k_colorable_examples() {
        let p = named::petersen();
        let c = k_colorable(&p, 3).unwrap();
        assert!(c.is_proper(&p));
        assert!(c.palette_size() <= 3);
        assert!(k_colorable(&Graph::cycle(5), 2).is_none());
        let e = k_colorable(&Graph::empty(4), 1).unwrap();
        assert_eq!(e.colors(), &[1, 1, 1, 1]);
    }

    #[test]
    fn chromatic_examples() {
        for (g, chi) in [
            (named::petersen(), 3),
            (Graph::cycle(5), 3),
            (named::theta_plus(), 3),
            (Graph::complete(5), 5),
            (Graph::cycle(6), 2),
            (Graph::empty(3), 1),
        ] {
            let (k, c) = chromatic_number(&g);
            assert_eq!(k, chi);
            assert!(c.is_proper(&g));
            assert_eq!(c.distinct_colors(), chi);
            assert!(k_colorable(&g, chi - 1).is_none());
        }
    }

    #[test]
    fn witness_is_deterministic() {
        let g = named::petersen();
        assert_eq!(chromatic_number(&g).1, chromatic_number(&g).1);
        assert_eq!(chromatic_number(&g).1.color(0), 1);
    }

    #[test]
    fn g0_examples() {
        assert_eq!(is_in_g0(&named::petersen()), G0Verdict::ChromaticNumber(3));
        assert_eq!(is_in_g0(&Graph::cycle(5)), G0Verdict::ChromaticNumber(3));
        assert_eq!(is_in_g0(&Graph::complete(4)), G0Verdict::NotInFamily);
    }

    #[test]
    fn kempe_paths_on_c5() {
        let g = Graph::cycle(5);
        let coloring = Coloring::new(vec![1, 2, 1, 2, 3]).unwrap();
        let q = KempeQuery {
            coloring: coloring.clone(),
            i: 1,
            j: 2,
            x: 0,
            y: 3,
        };
        assert_eq!(kempe_path_exists(&g, &q).unwrap(), Some(vec![0, 1, 2, 3]));
        let q = KempeQuery {
            coloring,
            i: 1,
            j: 3,
            x: 0,
            y: 2,
        };
        assert_eq!(kempe_path_exists(&g, &q).unwrap(), None);
    }

    #[test]
    fn kempe_rejects_improper() {
        let g = Graph::cycle(5);
        let bad = Coloring::new(vec![1, 1, 2, 1, 2]).unwrap();
        let q = KempeQuery {
            coloring: bad,
            i: 1,
            j: 2,
            x: 0,
            y: 2,
        };
        assert_eq!(kempe_path_exists(&g, &q), Err(Error::ImproperColoring(0, 1)));
    }

    #[test]
    fn kempe_parity_on_petersen() {
        let g = named::petersen();
        let (_, c) = chromatic_number(&g);
        let mut found = 0;
        for i in 1..=3 {
            for j in 1..=3 {
                if i == j {
                    continue;
                }
                for x in 0..10 {
                    for y in 0..10 {
                        if x == y {
                            continue;
                        }
                        let q = KempeQuery {
                            coloring: c.clone(),
                            i,
                            j,
                            x,
                            y,
                        };
                        if let Some(p) = kempe_path_exists(&g, &q).unwrap() {
                            found += 1;
                            let len = p.len() - 1;
                            assert_eq!(len % 2 == 0, c.color(x) == c.color(y));
                            for w in p.windows(2) {
                                assert!(g.has_edge(w[0], w[1]));
                                assert_ne!(c.color(w[0]), c.color(w[1]));
                            }
                        }
                    }
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn kempe_swap_stays_proper() {
        let g = named::petersen();
        let (_, c) = chromatic_number(&g);
        for x in 0..10 {
            let s = kempe_swap(&g, &c, 1, 2, x).unwrap();
            assert!(s.is_proper(&g));
        }
    }
}
