//! Brute-force reference implementations over adjacency bitmasks. They share
//! no code with the library beyond reading edges out of a `Graph`.

#![allow(dead_code)]

use oddhole::Graph;

pub fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    let mut adj = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Whether the vertices of `set` induce a connected subgraph. The empty set
/// counts as connected.
pub fn connected_within(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return true;
    }
    let mut seen = 1u32 << set.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & set & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == set
}

/// Smallest k admitting a proper k-coloring, by plain backtracking in vertex
/// order.
pub fn chromatic_oracle(adj: &[u32]) -> usize {
    fn assign(adj: &[u32], v: usize, k: usize, colors: &mut Vec<usize>) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..k {
            if (0..v).any(|u| adj[v] >> u & 1 == 1 && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if assign(adj, v + 1, k, colors) {
                return true;
            }
        }
        false
    }
    let n = adj.len();
    (0..=n)
        .find(|&k| assign(adj, 0, k, &mut vec![usize::MAX; n]))
        .expect("n colors always suffice")
}

/// Vertex sets of all chordless cycles of length at least 4: every vertex
/// has exactly two neighbors inside and the set is connected.
pub fn chordless_sets(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut out = Vec::new();
    for s in 1..=full(n) {
        if s.count_ones() < 4 {
            continue;
        }
        let mut rest = s;
        let mut ok = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & s).count_ones() != 2 {
                ok = false;
                break;
            }
        }
        if ok && connected_within(adj, s) {
            out.push(s);
        }
    }
    out
}

/// k-connectivity by definition: more than k vertices and no set of fewer
/// than k vertices disconnects the rest.
pub fn k_connected_oracle(adj: &[u32], k: usize) -> bool {
    let n = adj.len();
    if n <= k {
        return false;
    }
    (0..=full(n))
        .filter(|x| (x.count_ones() as usize) < k)
        .all(|x| connected_within(adj, full(n) & !x))
}

/// Shortest cycle length by brute force over edges: for each edge, the
/// shortest path between its ends avoiding it, plus one.
pub fn girth_oracle(adj: &[u32]) -> Option<usize> {
    let n = adj.len();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 0 {
                continue;
            }
            let mut seen = 1u32 << u;
            let mut frontier = 1u32 << u;
            let mut d = 0;
            while frontier != 0 && seen >> v & 1 == 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let w = f.trailing_zeros() as usize;
                    f &= f - 1;
                    let mut nb = adj[w] & !seen;
                    if w == u {
                        nb &= !(1 << v);
                    }
                    next |= nb;
                }
                seen |= next;
                frontier = next;
                d += 1;
            }
            if seen >> v & 1 == 1 {
                let len = d + 1;
                best = Some(best.map_or(len, |b: usize| b.min(len)));
            }
        }
    }
    best
}

/// Number of labeled connected graphs on `n` vertices with girth at least
/// `min_girth`, by deciding every pair in turn.
pub fn labeled_count(n: usize, min_girth: usize) -> u64 {
    fn dist_at_most(adj: &[u32], a: usize, b: usize, limit: usize) -> bool {
        let mut seen = 1u32 << a;
        let mut frontier = seen;
        for _ in 0..limit {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[w];
            }
            next &= !seen;
            if next >> b & 1 == 1 {
                return true;
            }
            seen |= next;
            frontier = next;
        }
        false
    }
    fn rec(adj: &mut Vec<u32>, pairs: &[(usize, usize)], i: usize, min_girth: usize) -> u64 {
        if i == pairs.len() {
            return u64::from(connected_within(adj, full(adj.len())));
        }
        let (a, b) = pairs[i];
        let mut total = rec(adj, pairs, i + 1, min_girth);
        // the new edge closes a cycle of length dist(a, b) + 1
        if !dist_at_most(adj, a, b, min_girth.saturating_sub(2)) {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            total += rec(adj, pairs, i + 1, min_girth);
            adj[a] &= !(1 << b);
            adj[b] &= !(1 << a);
        }
        total
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    rec(&mut vec![0; n], &pairs, 0, min_girth)
}

/// All permutations `p` with `adj[p[u]]` matching `adj[u]`, counted by
/// backtracking with a degree filter.
pub fn automorphism_count(adj: &[u32]) -> u64 {
    isomorphisms(adj, adj, false)
}

pub fn isomorphic_oracle(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && isomorphisms(a, b, true) > 0
}

fn isomorphisms(a: &[u32], b: &[u32], first_only: bool) -> u64 {
    fn rec(a: &[u32], b: &[u32], v: usize, map: &mut Vec<usize>, used: u32, first_only: bool) -> u64 {
        let n = a.len();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used >> w & 1 == 1 || a[v].count_ones() != b[w].count_ones() {
                continue;
            }
            if (0..v).any(|u| (a[v] >> u & 1) != (b[w] >> map[u] & 1)) {
                continue;
            }
            map[v] = w;
            total += rec(a, b, v + 1, map, used | 1 << w, first_only);
            if first_only && total > 0 {
                return total;
            }
        }
        total
    }
    rec(a, b, 0, &mut vec![0; a.len()], 0, first_only)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
