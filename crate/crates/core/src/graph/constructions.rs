use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, RootedGraph};

/// `A(X̄) = J - I - A(X)`.
pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.n(), |u, v| !g.has_edge(u, v))
}

/// Disjoint union; `h`'s vertices follow `g`'s.
pub fn union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    Graph::from_fn(n + h.n(), |u, v| match (u < n, v < n) {
        (true, true) => g.has_edge(u, v),
        (false, false) => h.has_edge(u - n, v - n),
        _ => false,
    })
}

/// Union plus every edge between `g` and `h`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    Graph::from_fn(n + h.n(), |u, v| match (u < n, v < n) {
        (true, true) => g.has_edge(u, v),
        (false, false) => h.has_edge(u - n, v - n),
        _ => true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Tensor,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Tensor,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];
}

impl std::str::FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cartesian" => Ok(Self::Cartesian),
            "tensor" => Ok(Self::Tensor),
            "strong" => Ok(Self::Strong),
            "lexicographic" => Ok(Self::Lexicographic),
            other => Err(format!("unknown product kind {other:?}")),
        }
    }
}

/// Graph product on `V(g) × V(h)`, vertex `(u, v)` numbered `u·|V(h)| + v`.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Graph {
    let m = h.n();
    Graph::from_fn(g.n() * m, |a, b| {
        let (u, v) = (a / m, a % m);
        let (x, y) = (b / m, b % m);
        let gu = g.has_edge(u, x);
        let hv = h.has_edge(v, y);
        match kind {
            ProductKind::Cartesian => (u == x && hv) || (v == y && gu),
            ProductKind::Tensor => gu && hv,
            ProductKind::Strong => (u == x && hv) || (v == y && gu) || (gu && hv),
            ProductKind::Lexicographic => gu || (u == x && hv),
        }
    })
}

/// `s • t`: identifies `t`'s root with `s`'s root. `s` keeps its numbering;
/// the non-root vertices of `t` follow in their original order.
pub fn coalesce(s: &RootedGraph, t: &RootedGraph) -> Graph {
    k_sum(s.graph(), &[s.root()], t.graph(), &[t.root()]).expect("single distinct in-range roots")
}

fn check_distinct(g: &Graph, verts: &[usize], what: &str) -> Result<(), GraphError> {
    let mut seen = BTreeSet::new();
    for &v in verts {
        if v >= g.n() {
            return Err(GraphError::BadVertexList(format!(
                "{what}: vertex {v} out of range for n = {}",
                g.n()
            )));
        }
        if !seen.insert(v) {
            return Err(GraphError::BadVertexList(format!(
                "{what}: vertex {v} repeated"
            )));
        }
    }
    Ok(())
}

/// Merges `x_verts[i]` with `y_verts[i]`. `x` keeps its numbering; the
/// unmerged vertices of `y` follow in order. An edge present in both copies
/// appears once.
pub fn k_sum(
    x: &Graph,
    x_verts: &[usize],
    y: &Graph,
    y_verts: &[usize],
) -> Result<Graph, GraphError> {
    if x_verts.len() != y_verts.len() {
        return Err(GraphError::BadVertexList(format!(
            "merge lists differ in length ({} vs {})",
            x_verts.len(),
            y_verts.len()
        )));
    }
    check_distinct(x, x_verts, "first graph")?;
    check_distinct(y, y_verts, "second graph")?;
    let n = x.n();
    let mut map = vec![usize::MAX; y.n()];
    for (&xv, &yv) in x_verts.iter().zip(y_verts) {
        map[yv] = xv;
    }
    let mut next = n;
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut out = Graph::empty(next);
    for (u, v) in x.edges() {
        out.set(u, v, true);
    }
    for (u, v) in y.edges() {
        out.set(map[u], map[v], true);
    }
    Ok(out)
}

/// Identifies the root of `ys[i]` with `attach[i]`. `x` keeps its numbering;
/// each `ys[i]`'s non-root vertices follow, graph by graph.
pub fn rooted_product(
    x: &Graph,
    attach: &[usize],
    ys: &[RootedGraph],
) -> Result<Graph, GraphError> {
    if attach.len() != ys.len() {
        return Err(GraphError::BadVertexList(format!(
            "{} attachment vertices for {} rooted graphs",
            attach.len(),
            ys.len()
        )));
    }
    check_distinct(x, attach, "base graph")?;
    let mut out = x.clone();
    for (&a, y) in attach.iter().zip(ys) {
        out = k_sum(&out, &[a], y.graph(), &[y.root()])?;
    }
    Ok(out)
}

/// Attaches `per_degree[d]` pendant vertices to every vertex of degree `d`.
///
/// Layout: for each degree class in ascending order, for each copy index
/// `j < s`, one block containing the `j`-th pendant of every class member
/// (members ascending). All pendant blocks come first; the original vertices
/// follow, keeping their relative order.
pub fn attach_pendants(
    g: &Graph,
    per_degree: &BTreeMap<usize, usize>,
) -> Result<Graph, GraphError> {
    let classes = g.degree_classes();
    if let Some(&d) = per_degree.keys().find(|d| !classes.contains_key(d)) {
        return Err(GraphError::UnknownDegreeClass(d));
    }
    let mut pendant_edges = Vec::new();
    for (d, members) in &classes {
        let s = per_degree.get(d).copied().unwrap_or(0);
        for _ in 0..s {
            for &v in members {
                pendant_edges.push(v);
            }
        }
    }
    let p = pendant_edges.len();
    let mut out = Graph::empty(p + g.n());
    for (u, v) in g.edges() {
        out.set(p + u, p + v, true);
    }
    for (i, &v) in pendant_edges.iter().enumerate() {
        out.set(i, p + v, true);
    }
    Ok(out)
}

/// For each listed degree `d` (processed in ascending order, duplicates
/// ignored) with class `V_d` of size `n_d`, adds an independent set of `n_d`
/// new vertices each joined to all of `V_d`. New blocks come first, the
/// original vertices follow in order.
pub fn add_join_vertices(g: &Graph, degrees: &[usize]) -> Result<Graph, GraphError> {
    let classes = g.degree_classes();
    let wanted: BTreeSet<usize> = degrees.iter().copied().collect();
    let mut blocks = Vec::new();
    for d in wanted {
        let members = classes.get(&d).ok_or(GraphError::UnknownDegreeClass(d))?;
        blocks.push(members.clone());
    }
    let p: usize = blocks.iter().map(Vec::len).sum();
    let mut out = Graph::empty(p + g.n());
    for (u, v) in g.edges() {
        out.set(p + u, p + v, true);
    }
    let mut next = 0;
    for members in &blocks {
        for _ in 0..members.len() {
            for &v in members {
                out.set(next, p + v, true);
            }
            next += 1;
        }
    }
    Ok(out)
}

/// Induced subgraph on `verts`, renumbered in the given order.
pub fn induced(g: &Graph, verts: &[usize]) -> Result<Graph, GraphError> {
    check_distinct(g, verts, "induced vertex set")?;
    Ok(Graph::from_fn(verts.len(), |a, b| {
        g.has_edge(verts[a], verts[b])
    }))
}

/// Removes `v`; later vertices shift down by one.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    g.check_vertex(v)?;
    let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    induced(g, &keep)
}

pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(GraphError::NoSuchEdge(u, v));
    }
    let mut out = g.clone();
    out.set(u, v, false);
    Ok(out)
}
