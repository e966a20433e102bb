//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// An immutable simple undirected graph.
///
/// Adjacency is stored as one [`VertexSet`] per vertex; every "mutation"
/// returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            if g.adj[u].insert(v) {
                g.adj[v].insert(u);
                g.edge_count += 1;
            }
        }
        Ok(g)
    }

    /// Builds a graph from adjacency sets; symmetry is not checked.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { n, adj, edge_count }
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).expect("valid complete graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n => Err(Error::InvalidVertex { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// The subgraph induced by `s`, relabeled `0..|s|` in ascending id
    /// order. The second component maps new ids back to original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let k = map.len();
        let adj = map
            .iter()
            .map(|&v| {
                let mut row = VertexSet::new(k);
                for w in self.adj[v].intersection(s).iter() {
                    row.insert(index[w]);
                }
                row
            })
            .collect();
        Ok((Graph::from_adjacency(adj), map))
    }

    /// Removes the vertices of `s`; returns the remaining graph and the map
    /// back to original ids.
    pub fn without_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        self.induced_subgraph(&self.vertex_set().difference(s))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g.edge_count -= 1;
        Ok(g)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        if g.adj[u].insert(v) {
            g.adj[v].insert(u);
            g.edge_count += 1;
        }
        Ok(g)
    }

    /// Appends a new vertex `n` adjacent to `nbrs`.
    pub fn with_new_vertex(&self, nbrs: &VertexSet) -> Result<Graph> {
        self.check_set(nbrs)?;
        let n = self.n + 1;
        let mut adj: Vec<VertexSet> = self.adj.clone();
        for (v, row) in adj.iter_mut().enumerate() {
            if nbrs.contains(v) {
                row.insert(self.n);
            }
        }
        adj.push(nbrs.clone());
        debug_assert_eq!(adj.len(), n);
        Ok(Graph {
            n,
            adj,
            edge_count: self.edge_count + nbrs.len(),
        })
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::new(self.n); self.n];
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                adj[perm[u]].insert(perm[v]);
            }
        }
        Graph {
            n: self.n,
            adj,
            edge_count: self.edge_count,
        }
    }

    /// True iff `s` contains no edge.
    pub fn is_stable(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| !self.adj[v].intersects(s)))
    }

    /// Connected components of the subgraph induced by `within`, each
    /// listed once, ordered by least member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(root) = left.first() {
            let mut comp = VertexSet::new(self.n);
            comp.insert(root);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(within);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Connected in the usual sense; the null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    pub fn induces_connected(&self, s: &VertexSet) -> bool {
        s.is_empty() || self.components_within(s).len() == 1
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.adj[v].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True iff adjacency is symmetric and loop-free, and the cached edge
    /// count matches.
    pub fn is_well_formed(&self) -> bool {
        let symmetric = (0..self.n).all(|u| {
            !self.adj[u].contains(u)
                && self.adj[u].last().is_none_or(|v| v < self.n)
                && self.adj[u].iter().all(|v| self.adj[v].contains(u))
        });
        let degree_sum: usize = (0..self.n).map(|v| self.degree(v)).sum();
        symmetric && degree_sum == 2 * self.edge_count
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
