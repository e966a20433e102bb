mod common;

use proptest::prelude::*;

use oddhole::canon::{canonical_form, same_orbit};
use oddhole::coloring::{chromatic_number, kempe_path_exists, kempe_swap, KempeQuery};
use oddhole::cycles::{chordless_cycles, clique_number, girth, is_member, Girth, Parity};
use oddhole::harness::{edgelist, graph6};
use oddhole::layers::{check_layer_theorem, decompose, layered_four_coloring, LayerTheoremVerdict};
use oddhole::named::PatternName;
use oddhole::structure::{
    cutset_report, disjoint_paths, enumerate_cutsets, find_named_pattern, is_k_connected, local_connectivity,
    vertex_connectivity,
};
use oddhole::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), prop::collection::vec(prop::bool::weighted(0.3), pairs)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// An odd cycle with a random forest hung off it: these lie in the family
/// whose girth is the cycle length.
fn cycle_with_trees() -> impl Strategy<Value = Graph> {
    (2usize..=4, prop::collection::vec(any::<prop::sample::Index>(), 0..10)).prop_map(|(ell, parents)| {
        let len = 2 * ell + 1;
        let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        for (k, p) in parents.iter().enumerate() {
            let v = len + k;
            edges.push((p.index(v), v));
        }
        Graph::from_edge_list(len + parents.len(), &edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&s).unwrap(), g.clone());
        prop_assert_eq!(graph6::encode(&graph6::decode(&s).unwrap()), s);
        prop_assert_eq!(edgelist::parse(&edgelist::format(&g)).unwrap(), g);
    }

    #[test]
    fn chordless_cycles_are_chordless_and_bound_girth(g in graph(10)) {
        let mut shortest = None;
        for h in chordless_cycles(&g, 3, g.n(), Parity::Any) {
            prop_assert!(h.verify(&g));
            shortest = Some(shortest.map_or(h.len(), |s: usize| s.min(h.len())));
        }
        let expected = match shortest {
            Some(k) => Girth::Finite(k),
            None => Girth::Infinite,
        };
        prop_assert_eq!(girth(&g), expected);
    }

    #[test]
    fn chordless_cycles_match_oracle(g in graph(11)) {
        let mut ours: Vec<u32> = chordless_cycles(&g, 4, g.n(), Parity::Any)
            .map(|h| h.vertices().iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        ours.sort_unstable();
        prop_assert_eq!(ours, common::chordless_sets(&common::masks(&g)));
    }

    #[test]
    fn exact_coloring_is_optimal(g in graph(10)) {
        let (chi, c) = chromatic_number(&g);
        prop_assert!(c.is_proper(&g));
        prop_assert!(chi >= clique_number(&g));
        prop_assert_eq!(chi, common::chromatic_oracle(&common::masks(&g)));
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in permuted(10)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        // a vertex and its image are in corresponding orbits
        if g.n() >= 2 {
            prop_assert_eq!(same_orbit(&g, 0, 1), same_orbit(&h, perm[0], perm[1]));
        }
    }

    #[test]
    fn connectivity_matches_oracle(g in graph(10)) {
        let adj = common::masks(&g);
        for k in 1..=4 {
            prop_assert_eq!(is_k_connected(&g, k), common::k_connected_oracle(&adj, k));
        }
        let kappa = vertex_connectivity(&g);
        if g.n() >= 2 {
            prop_assert!(is_k_connected(&g, kappa));
            prop_assert!(!is_k_connected(&g, kappa + 1));
        }
    }

    #[test]
    fn menger_paths_are_internally_disjoint(g in graph(10)) {
        for s in 0..g.n() {
            for t in s + 1..g.n() {
                if g.has_edge(s, t) {
                    continue;
                }
                let k = local_connectivity(&g, s, t, g.n());
                let paths = disjoint_paths(&g, s, t, k).unwrap();
                let mut inner = VertexSet::new(g.n());
                for p in &paths {
                    prop_assert_eq!((p[0], p[p.len() - 1]), (s, t));
                    for w in p.windows(2) {
                        prop_assert!(g.has_edge(w[0], w[1]));
                    }
                    for &v in &p[1..p.len() - 1] {
                        prop_assert!(inner.insert(v));
                    }
                }
                prop_assert!(disjoint_paths(&g, s, t, k + 1).is_none());
            }
        }
    }

    #[test]
    fn cutset_reports_reverify(g in graph(9), size in 1usize..=3) {
        for r in enumerate_cutsets(&g, size) {
            prop_assert!(r.verify(&g));
            prop_assert!(r.component_count >= 2);
            prop_assert_eq!(r.stable, g.is_stable(&r.cutset).unwrap());
        }
        let adj = common::masks(&g);
        let n = g.n();
        for x in 0..=common::full(n) {
            if x.count_ones() as usize != size {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|&v| x >> v & 1 == 1).collect();
            let rest = common::full(n) & !x;
            let cut = rest != 0 && !common::connected_within(&adj, rest);
            prop_assert_eq!(cutset_report(&g, &VertexSet::from_slice(n, &set)).unwrap().is_some(), cut);
        }
    }

    #[test]
    fn pattern_embeddings_are_induced(g in graph(11)) {
        for name in PatternName::NAMED {
            let p = name.graph().unwrap();
            if let Some(e) = find_named_pattern(&g, name) {
                prop_assert!(e.verify(&g, &p).is_ok());
            }
        }
    }

    #[test]
    fn kempe_swaps_stay_proper(g in graph(10), x in any::<prop::sample::Index>()) {
        prop_assume!(g.n() >= 2);
        let (_, c) = chromatic_number(&g);
        let x = x.index(g.n());
        let i = c.color(x);
        let j = if i == 1 { 2 } else { 1 };
        let swapped = kempe_swap(&g, &c, i, j, x).unwrap();
        prop_assert!(swapped.is_proper(&g));
        // a chain from x to y exists iff y changed color along with x
        for y in 0..g.n() {
            if y == x || ![i, j].contains(&c.color(y)) {
                continue;
            }
            let q = KempeQuery { coloring: c.clone(), i, j, x, y };
            let path = kempe_path_exists(&g, &q).unwrap();
            prop_assert_eq!(path.is_some(), swapped.color(y) != c.color(y));
        }
    }

    #[test]
    fn family_members_satisfy_layer_statements(g in cycle_with_trees()) {
        let ell = (girth(&g).finite().unwrap() - 1) / 2;
        prop_assert!(is_member(&g, ell).unwrap().member);
        for u in 0..g.n() {
            let s = VertexSet::singleton(g.n(), u);
            let v = check_layer_theorem(&g, &s, ell).unwrap();
            let violated = matches!(v, LayerTheoremVerdict::TheoremViolated { .. });
            prop_assert!(!violated);
            let c = layered_four_coloring(&g, u, ell).unwrap();
            prop_assert!(c.is_proper(&g));
            prop_assert!(c.palette_size() <= 4);
            let d = decompose(&g, &s).unwrap();
            prop_assert_eq!(d.sizes().iter().sum::<usize>(), g.n());
        }
    }
}
