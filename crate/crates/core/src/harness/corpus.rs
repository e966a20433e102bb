//! A small fixed corpus of named graphs used by the CLI, the benches and
//! the acceptance run.

use crate::graph::Graph;
use crate::named;

/// Generalized Petersen graph GP(10, 2), the dodecahedron.
pub fn dodecahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..10 {
        edges.push((i, (i + 1) % 10));
        edges.push((i, 10 + i));
        edges.push((10 + i, 10 + (i + 2) % 10));
    }
    Graph::from_edge_list(20, &edges).expect("valid edges")
}

/// Two 5-cycles sharing vertex 0.
pub fn glued_five_cycles() -> Graph {
    Graph::from_edge_list(
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 0),
        ],
    )
    .expect("valid edges")
}

/// The Grötzsch graph: triangle-free with chromatic number 4.
pub fn grotzsch() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, (i + 1) % 5));
        edges.push((5 + i, (i + 4) % 5));
        edges.push((10, 5 + i));
    }
    Graph::from_edge_list(11, &edges).expect("valid edges")
}

/// Named graphs in a fixed order.
pub fn corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", named::petersen()),
        (
            "petersen-minus-edge",
            named::petersen().without_edge(0, 1).expect("edge present"),
        ),
        ("theta", named::theta()),
        ("theta-", named::theta_minus()),
        ("theta+", named::theta_plus()),
        ("p-", named::p_minus()),
        ("c5", Graph::cycle(5)),
        ("c7", Graph::cycle(7)),
        ("c9", Graph::cycle(9)),
        ("c11", Graph::cycle(11)),
        ("glued-c5", glued_five_cycles()),
        ("dodecahedron", dodecahedron()),
        ("grotzsch", grotzsch()),
        ("k4", Graph::complete(4)),
    ]
}

/// Looks a corpus graph up by name.
pub fn by_name(name: &str) -> Option<Graph> {
    corpus().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}
