use std::collections::VecDeque;

use crate::graph::Graph;

/// Unit-capacity flow network on the vertex-split graph: vertex `v` becomes
/// `2v -> 2v+1` with capacity 1, each edge `uv` becomes `2u+1 -> 2v` and
/// `2v+1 -> 2u`.
struct SplitNetwork {
    cap: Vec<Vec<i32>>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let m = 2 * g.n();
        let mut cap = vec![vec![0; m]; m];
        let mut adj = vec![Vec::new(); m];
        let mut link = |a: usize, b: usize, c: i32, cap: &mut Vec<Vec<i32>>| {
            if cap[a][b] == 0 && cap[b][a] == 0 {
                adj[a].push(b);
                adj[b].push(a);
            }
            cap[a][b] += c;
        };
        let big = g.n() as i32 + 1;
        for v in 0..g.n() {
            let c = if v == s || v == t { big } else { 1 };
            link(2 * v, 2 * v + 1, c, &mut cap);
        }
        for (u, v) in g.edges() {
            link(2 * u + 1, 2 * v, 1, &mut cap);
            link(2 * v + 1, 2 * u, 1, &mut cap);
        }
        SplitNetwork { cap, adj }
    }

    fn augment(&mut self, src: usize, sink: usize) -> bool {
        let mut prev = vec![usize::MAX; self.cap.len()];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for &b in &self.adj[a] {
                if prev[b] == usize::MAX && self.cap[a][b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return false;
        }
        let mut b = sink;
        while b != src {
            let a = prev[b];
            self.cap[a][b] -= 1;
            self.cap[b][a] += 1;
            b = a;
        }
        true
    }
}

/// Number of internally disjoint `s`-`t` paths, capped at `limit`. For
/// adjacent `s`, `t` the direct edge counts as one path.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    if s == t {
        return limit;
    }
    let mut net = SplitNetwork::new(g, s, t);
    let mut flow = 0;
    while flow < limit && net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    flow
}

/// Up to `k` internally vertex-disjoint `s`-`t` paths, or `None` if fewer
/// exist.
pub fn disjoint_paths(g: &Graph, s: usize, t: usize, k: usize) -> Option<Vec<Vec<usize>>> {
    if s == t || s >= g.n() || t >= g.n() {
        return None;
    }
    let mut net = SplitNetwork::new(g, s, t);
    for _ in 0..k {
        if !net.augment(2 * s + 1, 2 * t) {
            return None;
        }
    }
    // flow on u_out -> v_in shows up as positive reverse capacity
    let mut used = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            let forward = net.cap[2 * a + 1][2 * b];
            let back = net.cap[2 * b][2 * a + 1];
            if forward == 0 && back >= 1 {
                used[a][b] = true;
            }
        }
    }
    let mut paths = Vec::with_capacity(k);
    for _ in 0..k {
        let mut path = vec![s];
        let mut cur = s;
        while cur != t {
            let next = (0..g.n()).find(|&w| used[cur][w])?;
            used[cur][next] = false;
            path.push(next);
            cur = next;
        }
        paths.push(path);
    }
    Some(paths)
}

/// True iff `g` has more than `k` vertices and no set of fewer than `k`
/// vertices disconnects it.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree().unwrap_or(0) < k || !g.is_connected() {
        return false;
    }
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) && local_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// The largest `k` with [`is_k_connected`]; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
    }
    best
}
