//! Degree-similarity certificates: exact verification, generation from each
//! construction, and the battery of necessary conditions used to refute.

mod battery;
mod constructions;
pub mod instances;

pub use battery::{check_pair, necessary_battery, Condition, NecessaryReport, Verdict};
pub use constructions::{
    certificate_for_addjoin, certificate_for_class_join, certificate_for_complement,
    certificate_for_join, certificate_for_ksum, certificate_for_pendants, certificate_for_product,
    certificate_for_rooted_product, certificate_for_switching, certificate_for_union,
    certificate_for_vertex_deletion,
};

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::json::{rational_matrix_from_json, rational_matrix_to_json};
use crate::algebra::{
    bareiss_det, format_rational, parse_rational, rat, AlgebraError, Matrix, Rational,
};
use crate::graph::{Graph, GraphError, SwitchingViolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("certificate matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not degree-switchable: {0}")]
    NotDegreeSwitchable(SwitchingViolation),
    #[error("{0} is not connected")]
    NotConnected(&'static str),
    #[error("{0} is not regular")]
    NotRegular(&'static str),
    #[error("certificate does not verify the given pair")]
    BadCertificate,
    #[error("bad cell index {0}")]
    BadCellIndex(usize),
    #[error("degree of vertex {vertex} in the {graph} graph is shared with another vertex")]
    DegreeNotUnique { graph: &'static str, vertex: usize },
    #[error("degree of vertex {u} ({du}) differs from degree of vertex {v} ({dv})")]
    DegreeMismatch {
        u: usize,
        du: usize,
        v: usize,
        dv: usize,
    },
    #[error("attachment vertices do not induce a connected subgraph")]
    AttachSetNotConnected,
    #[error("bad block structure: {0}")]
    BadBlockStructure(String),
    #[error("condition ({index}) violated: {detail}")]
    ConditionViolated { index: u8, detail: String },
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Shape of one diagonal block of a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockKind {
    Identity,
    ScaledIdentity(Rational),
    /// `(2/c)J_c - I_c`.
    SwitchBlock(usize),
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub size: usize,
    pub kind: BlockKind,
}

/// An invertible rational matrix `M` meant to satisfy `M⁻¹A₁M = A₂` and
/// `M⁻¹D₁M = D₂`, together with its block-diagonal layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    m: Matrix<Rational>,
    blocks: Vec<Block>,
}

fn is_scaled_identity(m: &Matrix<Rational>, s: usize, e: usize) -> Option<Rational> {
    let a = m[(s, s)].clone();
    let ok = (s..e).all(|i| {
        (s..e).all(|j| {
            if i == j {
                m[(i, j)] == a
            } else {
                m[(i, j)].is_zero()
            }
        })
    });
    ok.then_some(a)
}

fn is_switch_block(m: &Matrix<Rational>, s: usize, e: usize) -> bool {
    let c = e - s;
    let off = ratio_i(2, c);
    let diag = &off - Rational::one();
    (s..e).all(|i| (s..e).all(|j| m[(i, j)] == if i == j { diag.clone() } else { off.clone() }))
}

fn classify(m: &Matrix<Rational>, s: usize, e: usize) -> BlockKind {
    match is_scaled_identity(m, s, e) {
        Some(a) if a.is_one() => BlockKind::Identity,
        Some(a) => BlockKind::ScaledIdentity(a),
        None if e - s >= 2 && is_switch_block(m, s, e) => BlockKind::SwitchBlock(e - s),
        None => BlockKind::General,
    }
}

/// Finest partition of `0..n` into consecutive intervals with `m` zero
/// outside the diagonal blocks, classified, with runs of equal scalar blocks
/// merged.
fn infer_blocks(m: &Matrix<Rational>) -> Vec<Block> {
    let n = m.rows();
    let mut blocks: Vec<Block> = Vec::new();
    let mut start = 0;
    let mut reach = 0;
    for i in 0..n {
        for j in 0..n {
            if !m[(i, j)].is_zero() || !m[(j, i)].is_zero() {
                reach = reach.max(j);
            }
        }
        reach = reach.max(i);
        if reach == i {
            let kind = classify(m, start, i + 1);
            let size = i + 1 - start;
            match (blocks.last_mut(), &kind) {
                (Some(last), BlockKind::Identity | BlockKind::ScaledIdentity(_))
                    if last.kind == kind =>
                {
                    last.size += size;
                }
                _ => blocks.push(Block { size, kind }),
            }
            start = i + 1;
        }
    }
    blocks
}

impl Certificate {
    /// Wraps `m`, inferring the block layout.
    pub fn new(m: Matrix<Rational>) -> Result<Self, CertifyError> {
        if !m.is_square() {
            return Err(CertifyError::DimensionMismatch(format!(
                "certificate is {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let blocks = infer_blocks(&m);
        Ok(Self { m, blocks })
    }

    /// Wraps `m` with a declared layout, which must tile the diagonal, leave
    /// `m` zero outside the blocks and match each block's declared kind.
    pub fn with_blocks(m: Matrix<Rational>, blocks: Vec<Block>) -> Result<Self, CertifyError> {
        let n = m.rows();
        if !m.is_square() || blocks.iter().map(|b| b.size).sum::<usize>() != n {
            return Err(CertifyError::BadBlockStructure(format!(
                "block sizes do not tile a {}x{} matrix",
                m.rows(),
                m.cols()
            )));
        }
        let mut owner = Vec::with_capacity(n);
        for (k, b) in blocks.iter().enumerate() {
            owner.extend(std::iter::repeat_n(k, b.size));
        }
        for i in 0..n {
            for j in 0..n {
                if owner[i] != owner[j] && !m[(i, j)].is_zero() {
                    return Err(CertifyError::BadBlockStructure(format!(
                        "entry ({i}, {j}) lies outside the declared blocks"
                    )));
                }
            }
        }
        let mut s = 0;
        for (k, b) in blocks.iter().enumerate() {
            let e = s + b.size;
            let ok = match &b.kind {
                BlockKind::Identity => is_scaled_identity(&m, s, e).is_some_and(|a| a.is_one()),
                BlockKind::ScaledIdentity(a) => is_scaled_identity(&m, s, e).as_ref() == Some(a),
                BlockKind::SwitchBlock(c) => *c == b.size && is_switch_block(&m, s, e),
                BlockKind::General => true,
            };
            if !ok {
                return Err(CertifyError::BadBlockStructure(format!(
                    "block {k} does not have its declared kind"
                )));
            }
            s = e;
        }
        Ok(Self { m, blocks })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n)).expect("square")
    }

    /// The permutation matrix `P` with `P[v][perm[v]] = 1`, which certifies
    /// `(g, g.permute(perm))`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (v, &p) in perm.iter().enumerate() {
            m[(v, p)] = Rational::one();
        }
        Self::new(m).expect("square")
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix<Rational> {
        self.m
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.m.rows()
    }

    /// `c·M`, which certifies the same pair for any nonzero `c`.
    pub fn scaled(&self, c: &Rational) -> Self {
        assert!(!c.is_zero(), "scaling a certificate by zero");
        Self::new(self.m.scale(c)).expect("square")
    }

    pub fn to_json(&self) -> Value {
        let blocks: Vec<Value> = self
            .blocks
            .iter()
            .map(|b| match &b.kind {
                BlockKind::Identity => json!({"size": b.size, "kind": "identity"}),
                BlockKind::ScaledIdentity(a) => {
                    json!({"size": b.size, "kind": "scaledIdentity", "param": format_rational(a)})
                }
                BlockKind::SwitchBlock(c) => {
                    json!({"size": b.size, "kind": "switchBlock", "param": c.to_string()})
                }
                BlockKind::General => json!({"size": b.size, "kind": "general"}),
            })
            .collect();
        json!({"blocks": blocks, "matrix": rational_matrix_to_json(&self.m)})
    }

    /// Parses the JSON form. `"blocks"` is optional; when present it is
    /// checked against the matrix.
    pub fn from_json(v: &Value) -> Result<Self, CertifyError> {
        let bad = |e: AlgebraError| CertifyError::Malformed(e.to_string());
        let m = rational_matrix_from_json(
            v.get("matrix")
                .ok_or_else(|| CertifyError::Malformed("missing \"matrix\"".into()))?,
        )
        .map_err(bad)?;
        if !m.is_square() {
            return Err(CertifyError::Malformed(format!(
                "matrix is {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let Some(blocks) = v.get("blocks") else {
            return Self::new(m);
        };
        let arr = blocks
            .as_array()
            .ok_or_else(|| CertifyError::Malformed("\"blocks\" must be an array".into()))?;
        let parsed = arr
            .iter()
            .map(|b| {
                let size = b.get("size").and_then(Value::as_u64).ok_or_else(|| {
                    CertifyError::Malformed("block without integer \"size\"".into())
                })? as usize;
                let param = b.get("param").and_then(Value::as_str);
                let kind = match b.get("kind").and_then(Value::as_str) {
                    Some("identity") => BlockKind::Identity,
                    Some("general") => BlockKind::General,
                    Some("scaledIdentity") => BlockKind::ScaledIdentity(
                        parse_rational(param.ok_or_else(|| {
                            CertifyError::Malformed("scaledIdentity without \"param\"".into())
                        })?)
                        .map_err(bad)?,
                    ),
                    Some("switchBlock") => BlockKind::SwitchBlock(
                        param.and_then(|p| p.parse().ok()).ok_or_else(|| {
                            CertifyError::Malformed("switchBlock needs an integer \"param\"".into())
                        })?,
                    ),
                    other => {
                        return Err(CertifyError::Malformed(format!(
                            "unknown block kind {other:?}"
                        )))
                    }
                };
                Ok(Block { size, kind })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::with_blocks(m, parsed)
    }
}

/// Whether `cert` satisfies `M⁻¹A(g)M = A(h)` and `M⁻¹D(g)M = D(h)` exactly.
/// For invertible `M` these are `A(g)M = MA(h)` and `D(g)M = MD(h)`.
pub fn verify_certificate(g: &Graph, h: &Graph, cert: &Certificate) -> Result<bool, CertifyError> {
    let n = cert.n();
    if g.n() != n || h.n() != n {
        return Err(CertifyError::DimensionMismatch(format!(
            "graphs on {} and {} vertices with a {n}x{n} certificate",
            g.n(),
            h.n()
        )));
    }
    let m = cert.matrix();
    if bareiss_det(m).expect("square").is_zero() {
        return Err(CertifyError::Singular);
    }
    Ok(intertwines(g, h, m))
}

/// `A(g)M = MA(h)` and `D(g)M = MD(h)`.
fn intertwines(g: &Graph, h: &Graph, m: &Matrix<Rational>) -> bool {
    let n = m.rows();
    let (dg, dh) = (g.degrees(), h.degrees());
    let gn: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let hn: Vec<Vec<usize>> = (0..n).map(|v| h.neighbors(v).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            if dg[i] != dh[j] && !m[(i, j)].is_zero() {
                return false;
            }
            let left = gn[i]
                .iter()
                .fold(Rational::zero(), |acc, &k| acc + &m[(k, j)]);
            let right = hn[j]
                .iter()
                .fold(Rational::zero(), |acc, &k| acc + &m[(i, k)]);
            if left != right {
                return false;
            }
        }
    }
    true
}

/// Two graphs with a certificate claimed to relate them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedPair {
    pub g: Graph,
    pub h: Graph,
    pub cert: Certificate,
}

impl CertifiedPair {
    pub fn new(g: Graph, h: Graph, cert: Certificate) -> Self {
        Self { g, h, cert }
    }

    /// `(g, g, I)`.
    pub fn trivial(g: Graph) -> Self {
        let n = g.n();
        Self::new(g.clone(), g, Certificate::identity(n))
    }

    pub fn verify(&self) -> Result<bool, CertifyError> {
        verify_certificate(&self.g, &self.h, &self.cert)
    }

    /// Fails with `BadCertificate` unless the pair verifies.
    pub fn ensure_valid(&self) -> Result<(), CertifyError> {
        match self.verify() {
            Ok(true) => Ok(()),
            Ok(false) | Err(CertifyError::Singular) => Err(CertifyError::BadCertificate),
            Err(e) => Err(e),
        }
    }

    /// Relabels the second graph by `v ↦ perm[v]` and moves the certificate's
    /// columns along with it.
    pub fn relabel_second(&self, perm: &[usize]) -> Self {
        let n = self.cert.n();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, perm[j])] = self.cert.matrix()[(i, j)].clone();
            }
        }
        Self::new(
            self.g.clone(),
            self.h.permute(perm),
            Certificate::new(m).expect("square"),
        )
    }

    /// The same pair with the certificate multiplied by a nonzero scalar.
    pub fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.g.clone(), self.h.clone(), self.cert.scaled(c))
    }

    /// The pair with its roles exchanged, certified by `M⁻¹`.
    pub fn swapped(&self) -> Result<Self, CertifyError> {
        let inv = self
            .cert
            .matrix()
            .inverse()
            .map_err(|_| CertifyError::Singular)?;
        Ok(Self::new(
            self.h.clone(),
            self.g.clone(),
            Certificate::new(inv)?,
        ))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "first": crate::graph::emit_graph6(&self.g),
            "second": crate::graph::emit_graph6(&self.h),
            "certificate": self.cert.to_json(),
        })
    }

    /// Reads the layout written by [`CertifiedPair::to_json`]; graphs may be
    /// graph6 strings or edge-list objects.
    pub fn from_json(v: &Value) -> Result<Self, CertifyError> {
        let graph = |key: &str| -> Result<Graph, CertifyError> {
            match v.get(key) {
                Some(Value::String(s)) => Ok(Graph::parse(s)?),
                Some(obj @ Value::Object(_)) => Ok(Graph::from_edge_list_json(&obj.to_string())?),
                _ => Err(CertifyError::Malformed(format!("missing graph \"{key}\""))),
            }
        };
        let cert = v
            .get("certificate")
            .ok_or_else(|| CertifyError::Malformed("missing \"certificate\"".into()))?;
        Ok(Self::new(
            graph("first")?,
            graph("second")?,
            Certificate::from_json(cert)?,
        ))
    }
}

/// Rows of degree class `d` in `g` against columns of degree class `d` in
/// `h`, both in ascending vertex order.
fn class_block(g: &Graph, h: &Graph, m: &Matrix<Rational>, d: usize) -> Matrix<Rational> {
    let rows: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == d).collect();
    let cols: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == d).collect();
    m.select(&rows, &cols)
}

/// Requires every nonzero `M[u][v]` to join vertices of equal degree, the
/// layout that `D(g)M = MD(h)` forces.
fn check_class_blocks(pair: &CertifiedPair) -> Result<(), CertifyError> {
    let m = pair.cert.matrix();
    for u in 0..pair.g.n() {
        for v in 0..pair.h.n() {
            if !m[(u, v)].is_zero() && pair.g.degree(u) != pair.h.degree(v) {
                return Err(CertifyError::BadBlockStructure(format!(
                    "entry ({u}, {v}) links degrees {} and {}",
                    pair.g.degree(u),
                    pair.h.degree(v)
                )));
            }
        }
    }
    if pair.g.degree_multiset() != pair.h.degree_multiset() {
        return Err(CertifyError::BadBlockStructure(
            "degree multisets differ".into(),
        ));
    }
    Ok(())
}

fn ratio_i(n: usize, d: usize) -> Rational {
    rat(n as i64) / rat(d as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six_vertex_q() -> Matrix<Rational> {
        let half = ratio_i(1, 2);
        Matrix::from_fn(6, 6, |i, j| match (i < 4, j < 4) {
            (true, true) => {
                if i == j {
                    &half - Rational::one()
                } else {
                    half.clone()
                }
            }
            (false, false) if i == j => Rational::one(),
            _ => Rational::zero(),
        })
    }

    #[test]
    fn blocks_are_inferred() {
        let c = Certificate::new(six_vertex_q()).unwrap();
        assert_eq!(
            c.blocks(),
            &[
                Block {
                    size: 4,
                    kind: BlockKind::SwitchBlock(4)
                },
                Block {
                    size: 2,
                    kind: BlockKind::Identity
                }
            ]
        );
        let d = Certificate::new(Matrix::diagonal(vec![rat(2), rat(2), rat(1), rat(3)])).unwrap();
        assert_eq!(
            d.blocks(),
            &[
                Block {
                    size: 2,
                    kind: BlockKind::ScaledIdentity(rat(2))
                },
                Block {
                    size: 1,
                    kind: BlockKind::Identity
                },
                Block {
                    size: 1,
                    kind: BlockKind::ScaledIdentity(rat(3))
                },
            ]
        );
        let p = Certificate::permutation(&[1, 2, 0]);
        assert_eq!(
            p.blocks(),
            &[Block {
                size: 3,
                kind: BlockKind::General
            }]
        );
    }

    #[test]
    fn json_round_trip_and_declared_blocks() {
        let c = Certificate::new(six_vertex_q()).unwrap();
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        // A coarser declared layout is accepted.
        let v = json!({
            "blocks": [{"size": 6, "kind": "general"}],
            "matrix": rational_matrix_to_json(c.matrix()),
        });
        assert_eq!(Certificate::from_json(&v).unwrap().blocks().len(), 1);
        let wrong = json!({
            "blocks": [{"size": 3, "kind": "identity"}, {"size": 3, "kind": "identity"}],
            "matrix": rational_matrix_to_json(c.matrix()),
        });
        assert!(matches!(
            Certificate::from_json(&wrong),
            Err(CertifyError::BadBlockStructure(_))
        ));
        let no_blocks = json!({"matrix": [["1", "0"], ["0", "1"]]});
        assert_eq!(
            Certificate::from_json(&no_blocks).unwrap(),
            Certificate::identity(2)
        );
    }

    #[test]
    fn pair_json_round_trip() {
        let perm = [2, 0, 3, 1];
        let pair = CertifiedPair::trivial(Graph::path(4)).relabel_second(&perm);
        assert_eq!(CertifiedPair::from_json(&pair.to_json()).unwrap(), pair);
        let edge_list = json!({
            "first": {"n": 2, "edges": [[0, 1]]},
            "second": "A_",
            "certificate": {"matrix": [["1", "0"], ["0", "1"]]},
        });
        assert!(CertifiedPair::from_json(&edge_list)
            .unwrap()
            .verify()
            .unwrap());
        assert!(matches!(
            CertifiedPair::from_json(&json!({})),
            Err(CertifyError::Malformed(_))
        ));
    }

    #[test]
    fn identity_and_permutations() {
        let g = Graph::path(4);
        assert!(verify_certificate(&g, &g, &Certificate::identity(4)).unwrap());
        let perm = [2, 0, 3, 1];
        let pg = g.permute(&perm);
        assert!(verify_certificate(&g, &pg, &Certificate::permutation(&perm)).unwrap());
        // Permutations never relate non-isomorphic graphs.
        let star = Graph::star(3);
        for p in [[0, 1, 2, 3], [1, 0, 2, 3], [3, 2, 1, 0]] {
            assert!(!verify_certificate(&g, &star, &Certificate::permutation(&p)).unwrap());
        }
    }

    #[test]
    fn errors() {
        let g = Graph::path(3);
        let z = Certificate::new(Matrix::zeros(3, 3)).unwrap();
        assert_eq!(verify_certificate(&g, &g, &z), Err(CertifyError::Singular));
        assert!(matches!(
            verify_certificate(&g, &Graph::path(4), &Certificate::identity(3)),
            Err(CertifyError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn relabel_swap_scale_preserve_validity() {
        let g = Graph::cycle(5);
        let pair = CertifiedPair::trivial(g).relabel_second(&[3, 1, 4, 0, 2]);
        assert!(pair.verify().unwrap());
        assert!(pair.scaled(&ratio_i(2, 3)).verify().unwrap());
        assert!(pair.swapped().unwrap().verify().unwrap());
    }
}
