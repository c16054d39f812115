//! Exhaustive enumeration of small graphs up to isomorphism.

use std::collections::HashMap;

use super::{isomorphic, Graph};

/// Per-vertex degree, sorted neighbour degrees and triangle count, sorted.
type Fingerprint = Vec<(usize, Vec<usize>, usize)>;

/// Isomorphism-invariant fingerprint used to bucket candidates before the
/// exact test.
fn fingerprint(g: &Graph) -> Fingerprint {
    let mut out: Vec<_> = (0..g.n())
        .map(|v| {
            let nb: Vec<usize> = g.neighbors(v).collect();
            let mut nd: Vec<usize> = nb.iter().map(|&u| g.degree(u)).collect();
            nd.sort_unstable();
            let triangles = nb
                .iter()
                .enumerate()
                .map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
                .sum();
            (nb.len(), nd, triangles)
        })
        .collect();
    out.sort_unstable();
    out
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut buckets: HashMap<Fingerprint, Vec<Graph>> = HashMap::new();
        let mut next = Vec::new();
        for base in &level {
            for mask in 0u64..(1 << (k - 1)) {
                let mut g = Graph::empty(k);
                for (u, v) in base.edges() {
                    g.set(u, v, true);
                }
                for u in (0..k - 1).filter(|u| mask >> u & 1 == 1) {
                    g.set(u, k - 1, true);
                }
                let bucket = buckets.entry(fingerprint(&g)).or_default();
                if !bucket.iter().any(|h| isomorphic(h, &g)) {
                    bucket.push(g.clone());
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // OEIS A000088 and A001349.
        let all: Vec<usize> = (0..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }
}
