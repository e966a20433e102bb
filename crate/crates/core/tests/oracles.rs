//! Library kernels against brute-force oracles on exhaustive small inputs.

mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use common::*;
use oddhole::coloring::chromatic_number;
use oddhole::cycles::{chordless_cycles, girth, Girth, Parity};
use oddhole::harness::enumerate::{enumerate_graphs, enumerate_min_girth};
use oddhole::named;
use oddhole::par::Executor;
use oddhole::structure::is_k_connected;
use oddhole::Graph;

/// All graphs on 1..=8 vertices, grouped by order.
fn all_graphs() -> &'static [Vec<Graph>] {
    static ALL: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    ALL.get_or_init(|| enumerate_graphs(8, false, Executor::sequential()).levels())
}

fn girth5_levels(max_n: usize) -> Vec<Vec<Graph>> {
    enumerate_min_girth(max_n, 5, Executor::sequential()).levels()
}

#[test]
fn graph_counts_match_published_values() {
    // unlabeled graphs and connected graphs by order (OEIS A000088, A001349)
    let counts: Vec<usize> = all_graphs().iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044, 12346]);
    let connected: Vec<usize> = all_graphs()
        .iter()
        .map(|level| level.iter().filter(|g| g.is_connected()).count())
        .collect();
    assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853, 11117]);
}

#[test]
fn girth5_counts_match_the_graph_atlas() {
    // connected graphs with no cycle shorter than 5, counted with networkx's
    // atlas of all graphs on at most 7 vertices
    let counts: Vec<usize> = girth5_levels(7).iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 4, 8, 18]);
}

#[test]
fn girth5_enumeration_matches_labeled_count() {
    // each class of n-vertex graphs has n!/|Aut| labelings, so the classes
    // found must account for exactly the labeled graphs
    for level in girth5_levels(8) {
        let n = level[0].n();
        let adjs: Vec<Vec<u32>> = level.iter().map(masks).collect();
        for (g, adj) in level.iter().zip(&adjs) {
            assert!(connected_within(adj, full(n)));
            assert!(girth_oracle(adj).is_none_or(|k| k >= 5), "{g:?}");
        }
        let orbit_sum: u64 = adjs.iter().map(|a| factorial(n) / automorphism_count(a)).sum();
        assert_eq!(orbit_sum, labeled_count(n, 5), "n = {n}");
        for i in 0..adjs.len() {
            for j in i + 1..adjs.len() {
                assert!(
                    !isomorphic_oracle(&adjs[i], &adjs[j]),
                    "n = {n}: {i} and {j} are isomorphic"
                );
            }
        }
    }
}

#[test]
fn chromatic_number_matches_exhaustive_coloring() {
    for g in all_graphs().iter().flatten() {
        let (chi, c) = chromatic_number(g);
        assert_eq!(chi, chromatic_oracle(&masks(g)), "{g:?}");
        assert!(c.is_proper(g));
        assert_eq!(c.palette_size(), chi);
    }
}

#[test]
fn girth_matches_oracle() {
    for g in all_graphs().iter().flatten() {
        let expected = match girth_oracle(&masks(g)) {
            Some(k) => Girth::Finite(k),
            None => Girth::Infinite,
        };
        assert_eq!(girth(g), expected, "{g:?}");
    }
}

fn assert_chordless_cycles_match(g: &Graph) {
    let mut found: Vec<u32> = chordless_cycles(g, 4, g.n(), Parity::Any)
        .map(|h| {
            assert!(h.verify(g));
            h.vertices().iter().fold(0u32, |m, &v| m | 1 << v)
        })
        .collect();
    let before = found.len();
    found.sort_unstable();
    found.dedup();
    assert_eq!(found.len(), before, "duplicate cycle in {g:?}");
    assert_eq!(found, chordless_sets(&masks(g)), "{g:?}");
}

#[test]
fn chordless_cycles_match_subset_oracle() {
    for g in all_graphs().iter().flatten() {
        assert_chordless_cycles_match(g);
    }
    // order 9: every one-vertex extension of an order-8 graph
    let mut checked = 0;
    for g in all_graphs()[7].iter() {
        for mask in 0u32..1 << 8 {
            let nb: Vec<usize> = (0..8).filter(|&v| mask >> v & 1 == 1).collect();
            let h = g.with_new_vertex(&oddhole::VertexSet::from_slice(8, &nb)).unwrap();
            assert_chordless_cycles_match(&h);
            checked += 1;
        }
    }
    assert_eq!(checked, 12346 * 256);
}

#[test]
fn k_connectivity_matches_subset_removal() {
    for g in all_graphs().iter().flatten() {
        let adj = masks(g);
        for k in 0..=4 {
            assert_eq!(is_k_connected(g, k), k_connected_oracle(&adj, k), "k = {k}, {g:?}");
        }
    }
    for g in girth5_levels(10).iter().flatten() {
        let adj = masks(g);
        for k in 1..=3 {
            assert_eq!(is_k_connected(g, k), k_connected_oracle(&adj, k), "k = {k}, {g:?}");
        }
    }
}

#[test]
fn petersen_chordless_cycle_lengths() {
    let p = named::petersen();
    let mut by_len = BTreeMap::new();
    for s in chordless_sets(&masks(&p)) {
        *by_len.entry(s.count_ones()).or_insert(0) += 1;
    }
    assert_eq!(by_len, BTreeMap::from([(5, 12), (6, 10)]));
    let mut ours = BTreeMap::new();
    for h in chordless_cycles(&p, 4, 10, Parity::Any) {
        *ours.entry(h.len() as u32).or_insert(0) += 1;
    }
    assert_eq!(ours, by_len);
}
