//! Simple undirected graphs, their file formats, and every construction
//! needed to build degree-similar pairs.
//!
//! Vertex numbering is part of the contract for each construction because
//! the certificate matrices in [`crate::certify`] are written in that
//! numbering. Each constructor documents its layout.

mod constructions;
pub mod enumerate;
mod graph6;
mod iso;
pub mod random;
mod switching;
mod trees;

pub use constructions::{
    add_join_vertices, attach_pendants, coalesce, complement, delete_edge, delete_vertex, induced,
    join, k_sum, product, rooted_product, union, ProductKind,
};
pub use graph6::{emit_graph6, parse_graph6};
pub use iso::{find_isomorphism, isomorphic};
pub use switching::{
    local_switch, validate_switching, SwitchingPartition, SwitchingReport, SwitchingViolation,
};
pub use trees::{build_t1, build_t2};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rat, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge-list JSON: {0}")]
    MalformedJson(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("no edge {0}-{1}")]
    NoSuchEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("bad vertex list: {0}")]
    BadVertexList(String),
    #[error("no vertex of degree {0}")]
    UnknownDegreeClass(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not switchable: {0}")]
    NotSwitchable(SwitchingViolation),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from a symmetric 0/1 predicate on vertex pairs; the diagonal is
    /// ignored.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Self {
        Self::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Self::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// `K_{1,k}` with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        Self::from_fn(k + 1, |u, _| u == 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        self.adj[u * self.n + v] = on;
        self.adj[v * self.n + u] = on;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.set(u, v, true);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degree sequence sorted ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Vertices grouped by degree, classes in ascending degree order and
    /// vertices ascending within a class.
    pub fn degree_classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n {
            classes.entry(self.degree(v)).or_default().push(v);
        }
        classes
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        g
    }

    /// Structural invariants: symmetric, loop-free.
    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(v, u))
        })
    }

    pub fn adjacency_matrix(&self) -> Matrix<Rational> {
        Matrix::from_fn(self.n, self.n, |i, j| rat(self.has_edge(i, j) as i64))
    }

    pub fn degree_matrix(&self) -> Matrix<Rational> {
        Matrix::diagonal(self.degrees().into_iter().map(|d| rat(d as i64)).collect())
    }

    /// Accepts graph6 (optionally with a `>>graph6<<` header) or edge-list JSON
    /// `{"n": .., "edges": [[u, v], ..]}`.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let t = text.trim();
        if t.starts_with('{') {
            Self::from_edge_list_json(t)
        } else {
            parse_graph6(t)
        }
    }

    pub fn from_edge_list_json(text: &str) -> Result<Self, GraphError> {
        let el: EdgeList =
            serde_json::from_str(text).map_err(|e| GraphError::MalformedJson(e.to_string()))?;
        el.try_into()
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Edge-list interchange format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeList> for Graph {
    type Error = GraphError;

    fn try_from(el: EdgeList) -> Result<Self, GraphError> {
        let edges: Vec<_> = el.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(el.n, &edges)
    }
}

/// A graph with a distinguished vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self, GraphError> {
        graph.check_vertex(root)?;
        Ok(Self { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }
}
