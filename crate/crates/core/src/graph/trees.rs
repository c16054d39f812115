use super::{Graph, RootedGraph};

/// The 16-vertex tree T₁ rooted at `v` = vertex 0.
pub fn build_t1() -> RootedGraph {
    const EDGES: [(usize, usize); 15] = [
        (0, 1),
        (1, 2),
        (2, 3),
        (1, 4),
        (4, 5),
        (0, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 10),
        (7, 11),
        (11, 12),
        (12, 13),
        (13, 14),
        (13, 15),
    ];
    RootedGraph::new(Graph::from_edges(16, &EDGES).expect("static edges"), 0).expect("root 0")
}

/// The 16-vertex tree T₂ rooted at `w` = vertex 0. Isomorphic to T₁ as an
/// unrooted tree, but the root sits elsewhere.
pub fn build_t2() -> RootedGraph {
    const EDGES: [(usize, usize); 15] = [
        (0, 1),
        (1, 2),
        (2, 3),
        (2, 4),
        (0, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (5, 9),
        (9, 10),
        (10, 11),
        (11, 12),
        (12, 13),
        (11, 14),
        (14, 15),
    ];
    RootedGraph::new(Graph::from_edges(16, &EDGES).expect("static edges"), 0).expect("root 0")
}
