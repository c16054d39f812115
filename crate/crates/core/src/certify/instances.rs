//! Seeded random instances satisfying each construction's hypotheses.
//!
//! Every generator takes the RNG explicitly; a fixed seed reproduces the
//! whole sequence. Hypotheses are met by construction where possible and by
//! rejection sampling otherwise. Base pairs come from random switchings,
//! then have their second graph relabeled and their certificate rescaled so
//! that certificates are not aligned with the identity.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{ratio, Rational};
use crate::graph::random::{gnp, permutation, switching_instance, SwitchingShape};
use crate::graph::{Graph, ProductKind, RootedGraph, SwitchingPartition};

use super::{
    certificate_for_addjoin, certificate_for_class_join, certificate_for_complement,
    certificate_for_join, certificate_for_ksum, certificate_for_pendants, certificate_for_product,
    certificate_for_rooted_product, certificate_for_switching, certificate_for_union,
    certificate_for_vertex_deletion, CertifiedPair,
};

/// The certificate-producing constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Switching,
    Complement,
    Union,
    Join,
    ClassJoin,
    Product,
    KSum,
    RootedProduct,
    Pendants,
    AddJoin,
    VertexDeletion,
}

impl Construction {
    pub const ALL: [Construction; 11] = [
        Self::Switching,
        Self::Complement,
        Self::Union,
        Self::Join,
        Self::ClassJoin,
        Self::Product,
        Self::KSum,
        Self::RootedProduct,
        Self::Pendants,
        Self::AddJoin,
        Self::VertexDeletion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Switching => "switch",
            Self::Complement => "complement",
            Self::Union => "union",
            Self::Join => "join",
            Self::ClassJoin => "class-join",
            Self::Product => "product",
            Self::KSum => "ksum",
            Self::RootedProduct => "rooted",
            Self::Pendants => "pendants",
            Self::AddJoin => "addjoin",
            Self::VertexDeletion => "delete-vertex",
        }
    }
}

/// A random instance of `c` with its generated certificate.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, c: Construction) -> CertifiedPair {
    match c {
        Construction::Switching => {
            let (g, pi) = switching_instance(rng, SwitchingShape::Any);
            certificate_for_switching(&g, &pi).expect("generated instances are switchable")
        }
        Construction::Complement => {
            let base = base_pair(rng, 12, SwitchingShape::Any, true);
            certificate_for_complement(&base).expect("connected base")
        }
        Construction::Union => {
            let base = base_pair(rng, 10, SwitchingShape::Any, false);
            let n = rng.gen_range(0..=4);
            certificate_for_union(&base, &gnp(rng, n, 0.5)).expect("valid base")
        }
        Construction::Join => {
            let base = base_pair(rng, 12, SwitchingShape::Regular, true);
            let n = rng.gen_range(1..=3);
            certificate_for_join(&base, &gnp(rng, n, 0.5)).expect("connected regular base")
        }
        Construction::ClassJoin => {
            let (g, pi) = small_switching(rng, 10, SwitchingShape::Any, false);
            let ny = rng.gen_range(1..=3);
            let y = gnp(rng, ny, 0.5);
            let cells = random_cells(rng, &pi);
            certificate_for_class_join(&g, &pi, &y, &cells).expect("switchable base")
        }
        Construction::Product => {
            let kind = *ProductKind::ALL.choose(rng).expect("nonempty");
            let x = base_pair(rng, 6, SwitchingShape::Any, false);
            let y = if rng.gen_bool(0.5) {
                base_pair(
                    rng,
                    4,
                    SwitchingShape::Any,
                    kind == ProductKind::Lexicographic,
                )
            } else {
                let n = rng.gen_range(2..=3);
                let g = loop {
                    let g = gnp(rng, n, 0.6);
                    if kind != ProductKind::Lexicographic || g.is_connected() {
                        break g;
                    }
                };
                let perm = permutation(rng, n);
                CertifiedPair::trivial(g).relabel_second(&perm)
            };
            certificate_for_product(&x, &y, kind).expect("valid factors")
        }
        Construction::KSum => {
            let k = rng.gen_range(1..=3);
            let (pair, u, v) = with_unique_vertices(rng, k);
            let ny = rng.gen_range(k..=k + 3);
            let y = gnp(rng, ny, 0.5);
            let mut w = permutation(rng, ny);
            w.truncate(k);
            certificate_for_ksum(&pair, &u, &v, &y, &w).expect("hypotheses hold by construction")
        }
        Construction::RootedProduct => {
            let k = rng.gen_range(1..=3);
            let (pair, u, v) = with_unique_vertices(rng, k);
            let ys: Vec<RootedGraph> = (0..k)
                .map(|_| {
                    let n = rng.gen_range(1..=4);
                    let root = rng.gen_range(0..n);
                    RootedGraph::new(gnp(rng, n, 0.5), root).expect("root in range")
                })
                .collect();
            certificate_for_rooted_product(&pair, &u, &v, &ys)
                .expect("hypotheses hold by construction")
        }
        Construction::Pendants => {
            let base = base_pair(rng, 8, SwitchingShape::Any, false);
            let per: BTreeMap<usize, usize> = base
                .g
                .degree_classes()
                .keys()
                .map(|&d| (d, rng.gen_range(0..=1)))
                .collect();
            certificate_for_pendants(&base, &per).expect("valid base")
        }
        Construction::AddJoin => {
            let base = base_pair(rng, 8, SwitchingShape::Any, true);
            let degrees = nonempty_subset(rng, base.g.degree_classes().into_keys().collect());
            certificate_for_addjoin(&base, &degrees).expect("connected base")
        }
        Construction::VertexDeletion => loop {
            let source = *[
                Construction::ClassJoin,
                Construction::AddJoin,
                Construction::KSum,
            ]
            .choose(rng)
            .expect("nonempty");
            let pair = random_instance(rng, source);
            let options = deletable_vertices(&pair);
            if let Some(&(u1, u2)) = options.choose(rng) {
                break certificate_for_vertex_deletion(&pair, u1, u2).expect("conditions checked");
            }
        },
    }
}

fn random_scale<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let (p, q) = *[(1, 1), (-1, 1), (2, 1), (1, 2), (-3, 2), (5, 3)]
        .choose(rng)
        .expect("nonempty");
    ratio(p, q)
}

/// A switching instance on at most `max_n` vertices, optionally connected.
pub fn small_switching<R: Rng + ?Sized>(
    rng: &mut R,
    max_n: usize,
    shape: SwitchingShape,
    connected: bool,
) -> (Graph, SwitchingPartition) {
    loop {
        let (g, pi) = switching_instance(rng, shape);
        if g.n() <= max_n && (!connected || g.is_connected()) {
            return (g, pi);
        }
    }
}

/// A switched pair with the second graph relabeled and the certificate
/// rescaled.
pub fn base_pair<R: Rng + ?Sized>(
    rng: &mut R,
    max_n: usize,
    shape: SwitchingShape,
    connected: bool,
) -> CertifiedPair {
    let (g, pi) = small_switching(rng, max_n, shape, connected);
    let pair = certificate_for_switching(&g, &pi).expect("generated instances are switchable");
    let perm = permutation(rng, g.n());
    let scale = random_scale(rng);
    pair.relabel_second(&perm).scaled(&scale)
}

fn nonempty_subset<R: Rng + ?Sized>(rng: &mut R, items: Vec<usize>) -> Vec<usize> {
    loop {
        let pick: Vec<usize> = items
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if !pick.is_empty() {
            return pick;
        }
    }
}

/// A nonempty set of cell indices, where `pi.cells.len()` stands for the rest.
fn random_cells<R: Rng + ?Sized>(rng: &mut R, pi: &SwitchingPartition) -> Vec<usize> {
    nonempty_subset(rng, (0..=pi.cells.len()).collect())
}

/// A base pair extended by a disjoint caterpillar whose `k` spine vertices
/// have degrees above every other degree and distinct from each other, then
/// relabeled once more. Returns the pair and the spine vertices in each graph.
pub fn with_unique_vertices<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
) -> (CertifiedPair, Vec<usize>, Vec<usize>) {
    let base = base_pair(rng, 8, SwitchingShape::Any, false);
    let top = base.g.degrees().into_iter().max().unwrap_or(0);
    let mut edges = Vec::new();
    let mut next = k;
    for i in 0..k {
        if i + 1 < k {
            edges.push((i, i + 1));
        }
        let spine = usize::from(i > 0) + usize::from(i + 1 < k);
        let target = top + 1 + i + rng.gen_range(0..=1) * k;
        for _ in spine..target {
            edges.push((i, next));
            next += 1;
        }
    }
    let cat = Graph::from_edges(next, &edges).expect("valid caterpillar");
    let pair = certificate_for_union(&base, &cat).expect("valid base");
    let n = pair.g.n();
    let perm = permutation(rng, n);
    let spine: Vec<usize> = (0..k).map(|i| base.g.n() + i).collect();
    let second = spine.iter().map(|&v| perm[v]).collect();
    (pair.relabel_second(&perm), spine, second)
}

/// Every `(u₁, u₂)` satisfying the vertex-deletion hypotheses.
pub fn deletable_vertices(pair: &CertifiedPair) -> Vec<(usize, usize)> {
    let (g, h) = (&pair.g, &pair.h);
    let count = |x: &Graph, d: usize| (0..x.n()).filter(|&v| x.degree(v) == d).count();
    let mut out = Vec::new();
    for u1 in 0..g.n() {
        let d = g.degree(u1);
        if count(g, d) != 1 || count(h, d) != 1 {
            continue;
        }
        let closed = g.neighbors(u1).all(|w| {
            let dw = g.degree(w);
            (0..g.n())
                .filter(|&x| g.degree(x) == dw)
                .all(|x| g.has_edge(u1, x))
        });
        if closed {
            let u2 = (0..h.n())
                .find(|&v| h.degree(v) == d)
                .expect("counted above");
            out.push((u1, u2));
        }
    }
    out
}
