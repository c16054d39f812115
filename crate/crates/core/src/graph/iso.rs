//! Isomorphism testing by color refinement with individualization and
//! backtracking. Both graphs are refined together so that color ids are
//! comparable across them.

use std::collections::BTreeMap;

use super::Graph;

struct Pair<'a> {
    g: &'a Graph,
    h: &'a Graph,
    n: usize,
}

impl Pair<'_> {
    fn neighbors(&self, v: usize) -> Vec<usize> {
        if v < self.n {
            self.g.neighbors(v).collect()
        } else {
            self.h.neighbors(v - self.n).map(|u| u + self.n).collect()
        }
    }

    /// Refines `colors` (over the disjoint union) to the coarsest equitable
    /// partition below it. Returns `None` if the two sides' color class sizes
    /// diverge.
    fn refine(&self, adj: &[Vec<usize>], mut colors: Vec<u32>) -> Option<Vec<u32>> {
        let mut classes = count_classes(&colors);
        loop {
            let mut ids: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
            let sigs: Vec<(u32, Vec<u32>)> = (0..2 * self.n)
                .map(|v| {
                    let mut nb: Vec<u32> = adj[v].iter().map(|&u| colors[u]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            for s in &sigs {
                ids.entry(s.clone()).or_insert(0);
            }
            for (i, id) in ids.values_mut().enumerate() {
                *id = i as u32;
            }
            colors = sigs.iter().map(|s| ids[s]).collect();
            if !self.balanced(&colors) {
                return None;
            }
            let next = ids.len();
            if next == classes {
                return Some(colors);
            }
            classes = next;
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let mut a = colors[..self.n].to_vec();
        let mut b = colors[self.n..].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    fn search(&self, adj: &[Vec<usize>], colors: Vec<u32>) -> Option<Vec<usize>> {
        let colors = self.refine(adj, colors)?;
        let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &colors[..self.n] {
            *sizes.entry(c).or_default() += 1;
        }
        let target = sizes
            .iter()
            .filter(|(_, &s)| s > 1)
            .min_by_key(|(_, &s)| s)
            .map(|(&c, _)| c);
        let Some(target) = target else {
            // Discrete: the coloring is a bijection.
            let mut by_color = BTreeMap::new();
            for v in 0..self.n {
                by_color.insert(colors[self.n + v], v);
            }
            let map: Vec<usize> = (0..self.n).map(|u| by_color[&colors[u]]).collect();
            return self.is_isomorphism(&map).then_some(map);
        };
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        let u = (0..self.n)
            .find(|&v| colors[v] == target)
            .expect("class is nonempty");
        for w in (self.n..2 * self.n).filter(|&w| colors[w] == target) {
            let mut next = colors.clone();
            next[u] = fresh;
            next[w] = fresh;
            if let Some(map) = self.search(adj, next) {
                return Some(map);
            }
        }
        None
    }

    fn is_isomorphism(&self, map: &[usize]) -> bool {
        (0..self.n).all(|u| {
            (u + 1..self.n).all(|v| self.g.has_edge(u, v) == self.h.has_edge(map[u], map[v]))
        })
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Returns `σ` with `uv ∈ E(g) ⇔ σ(u)σ(v) ∈ E(h)`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n()
        || g.edge_count() != h.edge_count()
        || g.degree_multiset() != h.degree_multiset()
    {
        return None;
    }
    let pair = Pair { g, h, n: g.n() };
    if pair.n == 0 {
        return Some(Vec::new());
    }
    let adj: Vec<Vec<usize>> = (0..2 * pair.n).map(|v| pair.neighbors(v)).collect();
    pair.search(&adj, vec![0; 2 * pair.n])
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_t1, build_t2};
    use crate::graph::{coalesce, complement, random, RootedGraph};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_map(g: &Graph, h: &Graph, map: &[usize]) {
        assert_eq!(&g.permute(map), h);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        let map = find_isomorphism(&c5, &complement(&c5)).unwrap();
        check_map(&c5, &complement(&c5), &map);
    }

    #[test]
    fn coalesced_trees_differ() {
        let s = RootedGraph::new(Graph::complete(2), 0).unwrap();
        let a = coalesce(&s, &build_t1());
        let b = coalesce(&s, &build_t2());
        assert!(!isomorphic(&a, &b));
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 vs two triangles: same degrees, refinement alone cannot split.
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!isomorphic(&Graph::cycle(6), &two_triangles));
        // Both cubic on 6 vertices.
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3));
        assert!(!isomorphic(&prism, &k33));
    }

    #[test]
    fn random_permutations_are_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [0, 1, 5, 9, 14] {
            for _ in 0..10 {
                let g = random::gnp(&mut rng, n, 0.5);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let h = g.permute(&perm);
                let map = find_isomorphism(&g, &h).unwrap();
                check_map(&g, &h, &map);
            }
        }
        for _ in 0..10 {
            let g = random::random_regular(&mut rng, 12, 3);
            let mut perm: Vec<usize> = (0..12).collect();
            perm.shuffle(&mut rng);
            let h = g.permute(&perm);
            check_map(&g, &h, &find_isomorphism(&g, &h).unwrap());
        }
    }
}
