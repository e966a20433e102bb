//! Connectivity, cutsets, ears and induced patterns.

mod connectivity;
mod cutsets;
mod ears;
mod patterns;

pub use connectivity::{disjoint_paths, is_k_connected, local_connectivity, vertex_connectivity};
pub use cutsets::{
    cutset_report, enumerate_cutsets, find_unstable_cutset_on_5cycle, first_unstable_cutset, neighborhood_cutset_check,
    CutsetReport,
};
pub use ears::{bad_ears, find_strong_ear, shortest_ear, EarWitness};
pub use patterns::{
    find_induced_pattern, find_named_pattern, five_cycles_sharing_edge, is_isomorphic_to_petersen, PatternEmbedding,
};
