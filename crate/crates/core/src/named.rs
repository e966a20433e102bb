//! Named graphs with fixed labelings.
//!
//! * Petersen: outer cycle `u_i = i`, inner pentagram `v_i = 5 + i`, with
//!   edges `u_i u_{i+1}`, `v_i v_{i+2}` and spokes `u_i v_i` (indices mod 5).
//! * theta-plus: the 8-cycle `0..7` with chords `0-4` and `2-6`. It is the
//!   Petersen graph minus two adjacent vertices.
//! * theta: theta-plus without the chord `2-6` (an edge joining two
//!   degree-3 vertices).
//! * theta-minus: Petersen minus the induced path `u_4 u_0 u_1`; the
//!   remaining vertices `u_2, u_3, v_0, .., v_4` are relabeled `0..6` in
//!   that order.
//! * P-minus: Petersen minus vertex 0, relabeled `0..8` in id order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edge_list(10, &edges).expect("valid Petersen")
}

pub fn theta_plus() -> Graph {
    let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.push((0, 4));
    edges.push((2, 6));
    Graph::from_edge_list(8, &edges).expect("valid theta-plus")
}

pub fn theta() -> Graph {
    theta_plus().without_edge(2, 6).expect("chord present")
}

pub fn theta_minus() -> Graph {
    petersen()
        .without_vertices(&VertexSet::from_slice(10, &[4, 0, 1]))
        .expect("valid vertex set")
        .0
}

pub fn p_minus() -> Graph {
    petersen()
        .without_vertices(&VertexSet::singleton(10, 0))
        .expect("valid vertex set")
        .0
}

/// Patterns addressable by name on the command line and in embeddings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternName {
    Theta,
    ThetaMinus,
    ThetaPlus,
    Petersen,
    PMinus,
    Custom,
}

impl PatternName {
    pub const NAMED: [PatternName; 5] = [
        PatternName::Theta,
        PatternName::ThetaMinus,
        PatternName::ThetaPlus,
        PatternName::Petersen,
        PatternName::PMinus,
    ];

    /// The pattern graph; `None` for [`PatternName::Custom`].
    pub fn graph(self) -> Option<Graph> {
        match self {
            PatternName::Theta => Some(theta()),
            PatternName::ThetaMinus => Some(theta_minus()),
            PatternName::ThetaPlus => Some(theta_plus()),
            PatternName::Petersen => Some(petersen()),
            PatternName::PMinus => Some(p_minus()),
            PatternName::Custom => None,
        }
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternName::Theta => "theta",
            PatternName::ThetaMinus => "theta-",
            PatternName::ThetaPlus => "theta+",
            PatternName::Petersen => "petersen",
            PatternName::PMinus => "p-",
            PatternName::Custom => "custom",
        })
    }
}

impl FromStr for PatternName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "theta" => Ok(PatternName::Theta),
            "theta-" | "theta_minus" | "theta-minus" => Ok(PatternName::ThetaMinus),
            "theta+" | "theta_plus" | "theta-plus" => Ok(PatternName::ThetaPlus),
            "petersen" => Ok(PatternName::Petersen),
            "p-" | "p_minus" | "p-minus" => Ok(PatternName::PMinus),
            other => Err(Error::InvalidParameter(format!("unknown pattern `{other}`"))),
        }
    }
}
