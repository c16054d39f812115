//! Certificate generation for each degree-similarity construction. Every
//! function checks the construction's hypotheses, builds both graphs in the
//! layout documented in [`crate::graph`], and writes down the certificate
//! from the construction's proof.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::algebra::{Matrix, Rational};
use crate::graph::{
    add_join_vertices, attach_pendants, complement, delete_vertex, induced, join, k_sum,
    local_switch, product, rooted_product, union, validate_switching, Graph, ProductKind,
    RootedGraph, SwitchingPartition,
};

use super::{check_class_blocks, class_block, ratio_i, Certificate, CertifiedPair, CertifyError};

fn cert(m: Matrix<Rational>) -> Certificate {
    Certificate::new(m).expect("square by construction")
}

fn scalar_identity(a: &Rational, n: usize) -> Matrix<Rational> {
    Matrix::identity(n).scale(a)
}

/// The switching matrix `Q`: `(2/c)J - I` on each cell of size `c`, identity
/// on the rest, written in the graph's own vertex numbering.
fn switching_matrix(n: usize, pi: &SwitchingPartition) -> Matrix<Rational> {
    let cell = pi.cell_of(n);
    Matrix::from_fn(n, n, |u, v| {
        let delta = if u == v {
            Rational::one()
        } else {
            Rational::zero()
        };
        match (cell[u], cell[v]) {
            (Some(a), Some(b)) if a == b => ratio_i(2, pi.cells[a].len()) - delta,
            _ => delta,
        }
    })
}

fn switchable(g: &Graph, pi: &SwitchingPartition) -> Result<(), CertifyError> {
    let report = validate_switching(g, pi)?;
    match report.degree_violation {
        Some(v) => Err(CertifyError::NotDegreeSwitchable(v)),
        None => Ok(()),
    }
}

/// `(X, X^π, Q)` for a partition satisfying the degree-preserving switching
/// conditions.
pub fn certificate_for_switching(
    g: &Graph,
    pi: &SwitchingPartition,
) -> Result<CertifiedPair, CertifyError> {
    switchable(g, pi)?;
    let h = local_switch(g, pi)?;
    Ok(CertifiedPair::new(
        g.clone(),
        h,
        cert(switching_matrix(g.n(), pi)),
    ))
}

/// Complements of a certified pair, certified by the same matrix. The first
/// graph must be connected so that `M⁻¹JM = J`.
pub fn certificate_for_complement(pair: &CertifiedPair) -> Result<CertifiedPair, CertifyError> {
    if !pair.g.is_connected() {
        return Err(CertifyError::NotConnected("first graph"));
    }
    pair.ensure_valid()?;
    Ok(CertifiedPair::new(
        complement(&pair.g),
        complement(&pair.h),
        pair.cert.clone(),
    ))
}

/// `(X ∪ H, Y ∪ H)` with `diag(M, I)`.
pub fn certificate_for_union(
    pair: &CertifiedPair,
    h: &Graph,
) -> Result<CertifiedPair, CertifyError> {
    pair.ensure_valid()?;
    let m = Matrix::block_diagonal(&[pair.cert.matrix().clone(), Matrix::identity(h.n())]);
    Ok(CertifiedPair::new(
        union(&pair.g, h),
        union(&pair.h, h),
        cert(m),
    ))
}

/// `(X ∨ H, Y ∨ H)` for connected regular `X`. Connectivity and regularity
/// force `M1 = c1` and `1ᵀM = c1ᵀ`; the certificate is `diag(M, cI)`.
pub fn certificate_for_join(
    pair: &CertifiedPair,
    h: &Graph,
) -> Result<CertifiedPair, CertifyError> {
    if !pair.g.is_regular() {
        return Err(CertifyError::NotRegular("first graph"));
    }
    if !pair.g.is_connected() {
        return Err(CertifyError::NotConnected("first graph"));
    }
    pair.ensure_valid()?;
    let m = pair.cert.matrix();
    let n = m.rows();
    let c = if n == 0 {
        Rational::one()
    } else {
        (0..n).map(|j| &m[(0, j)]).sum()
    };
    let row_ok = (0..n).all(|i| (0..n).map(|j| &m[(i, j)]).sum::<Rational>() == c);
    let col_ok = (0..n).all(|j| (0..n).map(|i| &m[(i, j)]).sum::<Rational>() == c);
    if !row_ok || !col_ok {
        return Err(CertifyError::BadCertificate);
    }
    let q = Matrix::block_diagonal(&[m.clone(), scalar_identity(&c, h.n())]);
    Ok(CertifiedPair::new(
        join(&pair.g, h),
        join(&pair.h, h),
        cert(q),
    ))
}

/// Joins `y` to the union of the selected cells in both `X` and `X^π`;
/// index `pi.cells.len()` selects the rest `C`. `Q1 = 1` on every cell, so
/// `diag(Q, I)` certifies the pair. `y`'s vertices follow `X`'s.
pub fn certificate_for_class_join(
    g: &Graph,
    pi: &SwitchingPartition,
    y: &Graph,
    cells: &[usize],
) -> Result<CertifiedPair, CertifyError> {
    switchable(g, pi)?;
    let k = pi.cells.len();
    let mut seen = BTreeSet::new();
    for &c in cells {
        if c > k || !seen.insert(c) {
            return Err(CertifyError::BadCellIndex(c));
        }
    }
    let targets: Vec<usize> = cells
        .iter()
        .flat_map(|&c| {
            if c == k {
                pi.rest.clone()
            } else {
                pi.cells[c].clone()
            }
        })
        .collect();
    let build = |x: &Graph| {
        let mut out = union(x, y);
        for &v in &targets {
            for w in 0..y.n() {
                out.add_edge(v, x.n() + w)
                    .expect("distinct in-range vertices");
            }
        }
        out
    };
    let h = local_switch(g, pi)?;
    let q = Matrix::block_diagonal(&[switching_matrix(g.n(), pi), Matrix::identity(y.n())]);
    Ok(CertifiedPair::new(build(g), build(&h), cert(q)))
}

/// Products `X₁ ∘ Y₁` and `X₂ ∘ Y₂` certified by `M₁ ⊗ M₂`. The
/// lexicographic product needs `Y₁` connected so that `M₂⁻¹JM₂ = J`.
pub fn certificate_for_product(
    x: &CertifiedPair,
    y: &CertifiedPair,
    kind: ProductKind,
) -> Result<CertifiedPair, CertifyError> {
    if kind == ProductKind::Lexicographic && !y.g.is_connected() {
        return Err(CertifyError::NotConnected("first graph of the second pair"));
    }
    x.ensure_valid()?;
    y.ensure_valid()?;
    let m = x.cert.matrix().kron(y.cert.matrix());
    Ok(CertifiedPair::new(
        product(&x.g, &y.g, kind),
        product(&x.h, &y.h, kind),
        cert(m),
    ))
}

fn unique_degree(g: &Graph, v: usize, which: &'static str) -> Result<(), CertifyError> {
    let d = g.degree(v);
    if (0..g.n()).any(|w| w != v && g.degree(w) == d) {
        return Err(CertifyError::DegreeNotUnique {
            graph: which,
            vertex: v,
        });
    }
    Ok(())
}

/// Checks unique and matching degrees for the attachment lists and returns
/// the scalars `a_i = M[u_i][v_i]`.
fn attachment_scalars(
    pair: &CertifiedPair,
    verts1: &[usize],
    verts2: &[usize],
) -> Result<Vec<Rational>, CertifyError> {
    if verts1.len() != verts2.len() {
        return Err(CertifyError::DimensionMismatch(format!(
            "{} attachment vertices in the first graph, {} in the second",
            verts1.len(),
            verts2.len()
        )));
    }
    for (&u, &v) in verts1.iter().zip(verts2) {
        pair.g.check_vertex(u)?;
        pair.h.check_vertex(v)?;
        unique_degree(&pair.g, u, "first")?;
        unique_degree(&pair.h, v, "second")?;
        let (du, dv) = (pair.g.degree(u), pair.h.degree(v));
        if du != dv {
            return Err(CertifyError::DegreeMismatch { u, du, v, dv });
        }
    }
    pair.ensure_valid()?;
    Ok(verts1
        .iter()
        .zip(verts2)
        .map(|(&u, &v)| pair.cert.matrix()[(u, v)].clone())
        .collect())
}

/// k-sums of `X₁` at `u_i` and `X₂` at `v_i` with `Y` at `w_i`. The unique
/// degrees make `M` act on each `u_i` by a scalar `a_i`; connectivity of
/// `X₁[{u_i}]` makes the `a_i` equal, and `diag(M, aI)` certifies the pair.
pub fn certificate_for_ksum(
    pair: &CertifiedPair,
    verts1: &[usize],
    verts2: &[usize],
    y: &Graph,
    y_verts: &[usize],
) -> Result<CertifiedPair, CertifyError> {
    let scalars = attachment_scalars(pair, verts1, verts2)?;
    if !verts1.is_empty() && !induced(&pair.g, verts1)?.is_connected() {
        return Err(CertifyError::AttachSetNotConnected);
    }
    let g1 = k_sum(&pair.g, verts1, y, y_verts)?;
    let g2 = k_sum(&pair.h, verts2, y, y_verts)?;
    let a = scalars.first().cloned().unwrap_or_else(Rational::one);
    debug_assert!(
        scalars.iter().all(|s| *s == a),
        "connected attachment sets force equal scalars"
    );
    let tail = y.n() - y_verts.len();
    let m = Matrix::block_diagonal(&[pair.cert.matrix().clone(), scalar_identity(&a, tail)]);
    Ok(CertifiedPair::new(g1, g2, cert(m)))
}

/// Rooted products attaching `ys[i]` at `u_i` and `v_i`; certificate
/// `diag(M, a₁I, a₂I, …)` with one scalar block per attached copy.
pub fn certificate_for_rooted_product(
    pair: &CertifiedPair,
    verts1: &[usize],
    verts2: &[usize],
    ys: &[RootedGraph],
) -> Result<CertifiedPair, CertifyError> {
    let scalars = attachment_scalars(pair, verts1, verts2)?;
    let g1 = rooted_product(&pair.g, verts1, ys)?;
    let g2 = rooted_product(&pair.h, verts2, ys)?;
    let mut blocks = vec![pair.cert.matrix().clone()];
    blocks.extend(
        ys.iter()
            .zip(&scalars)
            .map(|(y, a)| scalar_identity(a, y.graph().n() - 1)),
    );
    Ok(CertifiedPair::new(
        g1,
        g2,
        cert(Matrix::block_diagonal(&blocks)),
    ))
}

/// Attaches `per_degree[d]` pendants to every vertex of degree `d` in both
/// graphs. With `M_d` the block of `M` on degree class `d`, the certificate
/// is `diag(I_{s_d} ⊗ M_d, …, M)` in the pendant-first layout.
pub fn certificate_for_pendants(
    pair: &CertifiedPair,
    per_degree: &BTreeMap<usize, usize>,
) -> Result<CertifiedPair, CertifyError> {
    check_class_blocks(pair)?;
    pair.ensure_valid()?;
    let g1 = attach_pendants(&pair.g, per_degree)?;
    let g2 = attach_pendants(&pair.h, per_degree)?;
    let mut blocks = Vec::new();
    for d in pair.g.degree_classes().into_keys() {
        let s = per_degree.get(&d).copied().unwrap_or(0);
        if s > 0 {
            let md = class_block(&pair.g, &pair.h, pair.cert.matrix(), d);
            blocks.push(Matrix::identity(s).kron(&md));
        }
    }
    blocks.push(pair.cert.matrix().clone());
    Ok(CertifiedPair::new(
        g1,
        g2,
        cert(Matrix::block_diagonal(&blocks)),
    ))
}

/// For each listed degree `d`, adds `|V_d|` new vertices joined to all of
/// `V_d` in both graphs. The first graph must be connected so that the row
/// and column sums of each `M_d` agree; the certificate is
/// `diag(M_{d_1}, …, M_{d_l}, M)`.
pub fn certificate_for_addjoin(
    pair: &CertifiedPair,
    degrees: &[usize],
) -> Result<CertifiedPair, CertifyError> {
    if !pair.g.is_connected() {
        return Err(CertifyError::NotConnected("first graph"));
    }
    check_class_blocks(pair)?;
    pair.ensure_valid()?;
    let g1 = add_join_vertices(&pair.g, degrees)?;
    let g2 = add_join_vertices(&pair.h, degrees)?;
    let wanted: BTreeSet<usize> = degrees.iter().copied().collect();
    let mut blocks: Vec<Matrix<Rational>> = wanted
        .into_iter()
        .map(|d| class_block(&pair.g, &pair.h, pair.cert.matrix(), d))
        .collect();
    blocks.push(pair.cert.matrix().clone());
    Ok(CertifiedPair::new(
        g1,
        g2,
        cert(Matrix::block_diagonal(&blocks)),
    ))
}

/// Deletes `u₁` and `u₂`. Conditions: (1) each has a degree no other vertex
/// of its graph has; (2) the degrees agree; (3) the neighborhood of `u₁` is
/// a union of degree classes of the first graph. The certificate is `M`
/// with row `u₁` and column `u₂` removed.
pub fn certificate_for_vertex_deletion(
    pair: &CertifiedPair,
    u1: usize,
    u2: usize,
) -> Result<CertifiedPair, CertifyError> {
    pair.g.check_vertex(u1)?;
    pair.h.check_vertex(u2)?;
    let violated = |index, detail: String| Err(CertifyError::ConditionViolated { index, detail });
    for (g, u, which) in [(&pair.g, u1, "first"), (&pair.h, u2, "second")] {
        if unique_degree(g, u, which).is_err() {
            return violated(
                1,
                format!("degree of vertex {u} is not unique in the {which} graph"),
            );
        }
    }
    let (d1, d2) = (pair.g.degree(u1), pair.h.degree(u2));
    if d1 != d2 {
        return violated(2, format!("degrees {d1} and {d2} differ"));
    }
    let nbrs: BTreeSet<usize> = pair.g.neighbors(u1).collect();
    let nbr_degrees: BTreeSet<usize> = nbrs.iter().map(|&w| pair.g.degree(w)).collect();
    if let Some(w) =
        (0..pair.g.n()).find(|w| !nbrs.contains(w) && nbr_degrees.contains(&pair.g.degree(*w)))
    {
        return violated(
            3,
            format!("vertex {w} has the degree of a neighbor of {u1} but is not adjacent to it"),
        );
    }
    pair.ensure_valid()?;
    let n = pair.cert.n();
    let rows: Vec<usize> = (0..n).filter(|&i| i != u1).collect();
    let cols: Vec<usize> = (0..n).filter(|&j| j != u2).collect();
    let m = pair.cert.matrix().select(&rows, &cols);
    Ok(CertifiedPair::new(
        delete_vertex(&pair.g, u1)?,
        delete_vertex(&pair.h, u2)?,
        cert(m),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::graph::random::{switching_instance, SwitchingShape};
    use crate::pencil::adjacency_charpoly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn six_vertex() -> (Graph, SwitchingPartition) {
        let g = Graph::from_edges(6, &[(4, 5), (4, 0), (4, 1), (5, 2), (5, 3)]).unwrap();
        (
            g,
            SwitchingPartition::new(vec![vec![0, 1, 2, 3]], vec![4, 5]),
        )
    }

    fn six_pair() -> CertifiedPair {
        let (g, pi) = six_vertex();
        certificate_for_switching(&g, &pi).unwrap()
    }

    fn assert_valid(p: &CertifiedPair) {
        assert!(p.verify().unwrap(), "{p:?}");
    }

    #[test]
    fn switching_six_vertex() {
        let p = six_pair();
        assert_valid(&p);
        let q = p.cert.matrix();
        let half = ratio_i(1, 2);
        let expected = Matrix::block_diagonal(&[
            Matrix::from_fn(4, 4, |i, j| {
                if i == j {
                    &half - Rational::one()
                } else {
                    half.clone()
                }
            }),
            Matrix::identity(2),
        ]);
        assert_eq!(q, &expected);
        // Orthogonal and involutory.
        assert_eq!(&q.transpose(), q);
        assert_eq!(q.try_mul(q).unwrap(), Matrix::identity(6));
    }

    #[test]
    fn switching_rejects_gm_only_instance() {
        // Vertex 4 sees half of the cell, vertex 5 sees none of it: the
        // adjacency spectrum is preserved but degrees inside the cell change.
        let g = Graph::from_edges(5, &[(4, 0), (4, 1), (0, 1), (2, 3)]).unwrap();
        let pi = SwitchingPartition::new(vec![vec![0, 1, 2, 3]], vec![4]);
        let report = validate_switching(&g, &pi).unwrap();
        assert!(report.gm_switchable());
        assert!(matches!(
            certificate_for_switching(&g, &pi),
            Err(CertifyError::NotDegreeSwitchable(_))
        ));
        let h = local_switch(&g, &pi).unwrap();
        assert_eq!(adjacency_charpoly(&g), adjacency_charpoly(&h));
    }

    #[test]
    fn random_switchings_verify() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..25 {
            let (g, pi) = switching_instance(&mut rng, SwitchingShape::Any);
            assert_valid(&certificate_for_switching(&g, &pi).unwrap());
        }
    }

    #[test]
    fn complement_keeps_the_matrix() {
        let p = six_pair();
        let c = certificate_for_complement(&p).unwrap();
        assert_valid(&c);
        assert_eq!(c.cert, p.cert);
        let cc = certificate_for_complement(&c);
        // The complement of a connected graph may be disconnected.
        if let Ok(cc) = cc {
            assert_eq!(cc.g, p.g);
            assert_valid(&cc);
        }
        let k3 = CertifiedPair::trivial(Graph::complete(3));
        let e = certificate_for_complement(&k3).unwrap();
        assert_eq!(e.g, Graph::empty(3));
        assert_valid(&e);
        let disconnected = CertifiedPair::trivial(Graph::empty(2));
        assert_eq!(
            certificate_for_complement(&disconnected),
            Err(CertifyError::NotConnected("first graph"))
        );
    }

    #[test]
    fn union_and_join() {
        let p = six_pair();
        let u = certificate_for_union(&p, &Graph::complete(3)).unwrap();
        assert_eq!(u.g.n(), 9);
        assert_valid(&u);
        assert_valid(&certificate_for_union(&p, &Graph::empty(0)).unwrap());
        assert_eq!(
            certificate_for_join(&p, &Graph::complete(1)),
            Err(CertifyError::NotRegular("first graph"))
        );
        let c6 = CertifiedPair::trivial(Graph::cycle(6))
            .relabel_second(&[1, 2, 3, 4, 5, 0])
            .scaled(&rat(3));
        let j = certificate_for_join(&c6, &Graph::path(3)).unwrap();
        assert_valid(&j);
    }

    #[test]
    fn class_join() {
        let (g, pi) = six_vertex();
        let p = certificate_for_class_join(&g, &pi, &Graph::path(3), &[0]).unwrap();
        assert_eq!(p.g.n(), 9);
        assert_valid(&p);
        for w in 6..9 {
            let dy = Graph::path(3).degree(w - 6);
            assert_eq!(p.g.degree(w), dy + 4);
        }
        let dom = certificate_for_class_join(&g, &pi, &Graph::complete(1), &[0, 1]).unwrap();
        assert_valid(&dom);
        assert_eq!(dom.g.degree(6), 6);
        assert_eq!(
            certificate_for_class_join(&g, &pi, &Graph::complete(1), &[2]),
            Err(CertifyError::BadCellIndex(2))
        );
        assert_eq!(
            certificate_for_class_join(&g, &pi, &Graph::complete(1), &[0, 0]),
            Err(CertifyError::BadCellIndex(0))
        );
    }

    #[test]
    fn products() {
        let p = six_pair();
        let k2 = CertifiedPair::trivial(Graph::complete(2));
        for kind in ProductKind::ALL {
            let q = certificate_for_product(&p, &k2, kind).unwrap();
            assert_valid(&q);
            assert_eq!(q.cert.matrix(), &p.cert.matrix().kron(&Matrix::identity(2)));
        }
        let e2 = CertifiedPair::trivial(Graph::empty(2));
        assert!(certificate_for_product(&p, &e2, ProductKind::Lexicographic).is_err());
        assert_valid(&certificate_for_product(&p, &e2, ProductKind::Strong).unwrap());
    }

    /// The six-vertex pair plus a disjoint star whose center has a degree no
    /// other vertex has.
    fn with_star() -> (CertifiedPair, usize) {
        let p = six_pair().scaled(&crate::algebra::ratio(-2, 3));
        let u = certificate_for_union(&p, &Graph::star(4)).unwrap();
        (u, 6)
    }

    #[test]
    fn ksum_and_rooted_product() {
        let (p, c) = with_star();
        let k = certificate_for_ksum(&p, &[c], &[c], &Graph::complete(2), &[0]).unwrap();
        assert_valid(&k);
        // Two adjacent vertices of degrees 5 and 6.
        let mut edges = vec![(0, 1)];
        edges.extend((2..6).map(|v| (0, v)));
        edges.extend((6..11).map(|v| (1, v)));
        let double_star = Graph::from_edges(11, &edges).unwrap();
        let p2 = certificate_for_union(&six_pair().scaled(&rat(5)), &double_star).unwrap();
        let k2 = certificate_for_ksum(&p2, &[6, 7], &[6, 7], &Graph::cycle(4), &[0, 1]).unwrap();
        assert_valid(&k2);
        let apart = certificate_for_ksum(&p2, &[6, 8], &[6, 8], &Graph::cycle(4), &[0, 1]);
        assert!(matches!(
            apart,
            Err(CertifyError::DegreeNotUnique { .. }) | Err(CertifyError::AttachSetNotConnected)
        ));
        let r = certificate_for_rooted_product(
            &p,
            &[c],
            &[c],
            &[RootedGraph::new(Graph::cycle(3), 0).unwrap()],
        )
        .unwrap();
        assert_valid(&r);
        assert_eq!(r.g.n(), p.g.n() + 2);
        let trivial = certificate_for_rooted_product(
            &p,
            &[c],
            &[c],
            &[RootedGraph::new(Graph::complete(1), 0).unwrap()],
        )
        .unwrap();
        assert_eq!(trivial.g, p.g);
        assert!(matches!(
            certificate_for_ksum(&p, &[0], &[0], &Graph::complete(2), &[0]),
            Err(CertifyError::DegreeNotUnique { .. })
        ));
    }

    #[test]
    fn pendants_and_addjoin() {
        let p = six_pair();
        let all: BTreeMap<usize, usize> = p.g.degree_classes().keys().map(|&d| (d, 1)).collect();
        let q = certificate_for_pendants(&p, &all).unwrap();
        assert_eq!(q.g.n(), 12);
        assert_valid(&q);
        assert_eq!(certificate_for_pendants(&p, &BTreeMap::new()).unwrap(), p);
        let a = certificate_for_addjoin(&p, &[1]).unwrap();
        assert_valid(&a);
        assert_eq!(a.g.n(), 10);
        for v in 0..4 {
            assert_eq!(a.g.degree(v), 4);
        }
        assert_eq!(certificate_for_addjoin(&p, &[]).unwrap(), p);
    }

    #[test]
    fn vertex_deletion() {
        let (g, pi) = six_vertex();
        let dom = certificate_for_class_join(&g, &pi, &Graph::complete(1), &[0, 1]).unwrap();
        let d = certificate_for_vertex_deletion(&dom, 6, 6).unwrap();
        assert_valid(&d);
        assert_eq!(d.g, g);
        // a⁻¹ 1ᵀ M₁ is all ones, with M₁ the block on the neighborhood.
        let m = dom.cert.matrix();
        let a = m[(6, 6)].clone();
        for j in 0..6 {
            let col: Rational = (0..6).map(|i| &m[(i, j)]).sum();
            assert_eq!(col / &a, Rational::one());
        }
        assert!(matches!(
            certificate_for_vertex_deletion(&dom, 0, 0),
            Err(CertifyError::ConditionViolated { index: 1, .. })
        ));
    }
}
