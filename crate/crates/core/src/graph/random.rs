//! Seeded random graph generators. Every function takes the RNG explicitly so
//! runs are reproducible from a single seed.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, SwitchingPartition};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set(u, v, true);
            }
        }
    }
    g
}

/// Uniformly random permutation of `0..n`.
pub fn permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random `d`-regular graph: a circulant seed scrambled by relabeling and
/// degree-preserving double-edge swaps.
///
/// # Panics
/// If no `d`-regular graph on `n` vertices exists.
pub fn random_regular<R: Rng + ?Sized>(rng: &mut R, n: usize, d: usize) -> Graph {
    assert!(
        d < n.max(1) && (n * d).is_multiple_of(2),
        "no {d}-regular graph on {n} vertices"
    );
    let mut g = Graph::empty(n);
    for i in 0..n {
        for s in 1..=d / 2 {
            g.set(i, (i + s) % n, true);
        }
        if d % 2 == 1 {
            g.set(i, (i + n / 2) % n, true);
        }
    }
    let g = g.permute(&permutation(rng, n));
    scramble(rng, g, |_, _| true)
}

/// Performs random double-edge swaps `ab, cd → ad, cb`, keeping every
/// degree. `allowed(u, v)` restricts which pairs may become edges.
fn scramble<R: Rng + ?Sized>(
    rng: &mut R,
    mut g: Graph,
    allowed: impl Fn(usize, usize) -> bool,
) -> Graph {
    let m = g.edge_count();
    if m < 2 {
        return g;
    }
    for _ in 0..10 * m {
        let edges = g.edges();
        let &(a, b) = edges.choose(rng).expect("nonempty");
        let &(c, d) = edges.choose(rng).expect("nonempty");
        let (c, d) = if rng.gen_bool(0.5) { (c, d) } else { (d, c) };
        let distinct = a != c && a != d && b != c && b != d;
        if distinct && allowed(a, d) && allowed(c, b) && !g.has_edge(a, d) && !g.has_edge(c, b) {
            g.set(a, b, false);
            g.set(c, d, false);
            g.set(a, d, true);
            g.set(c, b, true);
        }
    }
    g
}

/// Random bipartite edge set between sides of sizes `p` and `q` where every
/// left vertex has degree `dp` (right degrees are then `p·dp/q`).
fn biregular<R: Rng + ?Sized>(rng: &mut R, p: usize, dp: usize, q: usize) -> Vec<(usize, usize)> {
    assert!(dp <= q && (p * dp).is_multiple_of(q));
    let mut g = Graph::empty(p + q);
    for i in 0..p {
        for s in 0..dp {
            g.set(i, p + (i * dp + s) % q, true);
        }
    }
    let mut perm = permutation(rng, p);
    perm.extend(permutation(rng, q).into_iter().map(|v| v + p));
    let g = scramble(rng, g.permute(&perm), |u, v| (u < p) != (v < p));
    g.edges().into_iter().map(|(u, v)| (u, v - p)).collect()
}

/// Which family of switching instances to draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchingShape {
    Any,
    /// The whole graph is regular.
    Regular,
}

/// Random graph with a partition satisfying the degree-preserving switching
/// conditions: every rest vertex sees half of each cell, every cell vertex
/// sees half of the rest, and cell-to-cell counts are constant. Vertices are
/// randomly relabeled, so cells are not contiguous.
pub fn switching_instance<R: Rng + ?Sized>(
    rng: &mut R,
    shape: SwitchingShape,
) -> (Graph, SwitchingPartition) {
    loop {
        let k = rng.gen_range(1..=2);
        let sizes: Vec<usize> = (0..k)
            .map(|_| *[2, 4].choose(rng).expect("nonempty"))
            .collect();
        let c = *[2, 4].choose(rng).expect("nonempty");
        let mut offsets = vec![0];
        for &s in &sizes {
            offsets.push(offsets.last().expect("nonempty") + s);
        }
        let n = offsets[k] + c;
        let rest0 = offsets[k];
        let mut g = Graph::empty(n);
        for i in 0..k {
            let (oi, ci) = (offsets[i], sizes[i]);
            let d = rng.gen_range(0..ci);
            let inner = random_regular(rng, ci, d);
            for (u, v) in inner.edges() {
                g.set(oi + u, oi + v, true);
            }
            for j in i + 1..k {
                let (oj, cj) = (offsets[j], sizes[j]);
                let choices: Vec<usize> = (0..=cj).filter(|d| (ci * d) % cj == 0).collect();
                let d = *choices.choose(rng).expect("0 always qualifies");
                for (u, v) in biregular(rng, ci, d, cj) {
                    g.set(oi + u, oj + v, true);
                }
            }
            for (u, v) in biregular(rng, ci, c / 2, c) {
                g.set(oi + u, rest0 + v, true);
            }
        }
        let inner = match shape {
            SwitchingShape::Any => gnp(rng, c, 0.5),
            SwitchingShape::Regular => {
                let d = rng.gen_range(0..c);
                random_regular(rng, c, d)
            }
        };
        for (u, v) in inner.edges() {
            g.set(rest0 + u, rest0 + v, true);
        }
        if shape == SwitchingShape::Regular && !g.is_regular() {
            continue;
        }
        let pi = SwitchingPartition::new(
            (0..k)
                .map(|i| (offsets[i]..offsets[i + 1]).collect())
                .collect(),
            (rest0..n).collect(),
        );
        let perm = permutation(rng, n);
        return (g.permute(&perm), pi.permute(&perm));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_switching;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn regular_graphs_are_regular() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (n, d) in [(1, 0), (6, 3), (10, 4), (7, 2), (8, 7), (9, 0)] {
            let g = random_regular(&mut rng, n, d);
            assert!(g.is_simple());
            assert_eq!(g.degrees(), vec![d; n]);
        }
    }

    #[test]
    fn switching_instances_satisfy_conditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for shape in [SwitchingShape::Any, SwitchingShape::Regular] {
            for _ in 0..30 {
                let (g, pi) = switching_instance(&mut rng, shape);
                assert!(validate_switching(&g, &pi).unwrap().degree_switchable());
                if shape == SwitchingShape::Regular {
                    assert!(g.is_regular());
                }
            }
        }
    }
}
