//! Structure and coloring of graphs with girth `2l+1` and no longer odd
//! holes.
//!
//! The crate provides exact kernels (girth, chordless cycles, coloring,
//! connectivity, induced patterns, canonical labeling) and a harness that
//! checks structural statements about these graph families over streamed or
//! exhaustively enumerated inputs.

pub mod bitset;
pub mod canon;
pub mod coloring;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod harness;
pub mod layers;
pub mod named;
pub mod par;
pub mod structure;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
