//! Reduced (non-backtracking) walk counts and the Ihara zeta polynomial.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{integer_det, rat, Matrix, Rational, UniPoly};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("graph has an isolated vertex {0}")]
    IsolatedVertex(usize),
}

/// `p_0, …, p_R` where `p_r[u][v]` counts reduced walks of length `r` from
/// `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSeries {
    pub terms: Vec<Matrix<BigInt>>,
}

impl WalkSeries {
    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|m| {
                Value::Array(
                    (0..m.rows())
                        .map(|i| {
                            Value::Array(m.row(i).iter().map(|x| json!(x.to_string())).collect())
                        })
                        .collect(),
                )
            })
            .collect();
        json!({"order": self.order(), "terms": terms})
    }
}

fn int_adjacency(g: &Graph) -> Matrix<BigInt> {
    Matrix::from_fn(g.n(), g.n(), |i, j| BigInt::from(g.has_edge(i, j) as u8))
}

/// `D - I`.
fn degree_minus_one(g: &Graph) -> Matrix<BigInt> {
    Matrix::diagonal(
        g.degrees()
            .into_iter()
            .map(|d| BigInt::from(d) - 1)
            .collect(),
    )
}

fn mul(a: &Matrix<BigInt>, b: &Matrix<BigInt>) -> Matrix<BigInt> {
    a.try_mul(b).expect("square matrices of one size")
}

fn sub(a: &Matrix<BigInt>, b: &Matrix<BigInt>) -> Matrix<BigInt> {
    a.try_sub(b).expect("square matrices of one size")
}

/// `p_0 = I`, `p_1 = A`, `p_2 = A² - D`, then
/// `p_{r+1} = A·p_r - (D - I)·p_{r-1}` for `r ≥ 2`.
pub fn reduced_walk_series(g: &Graph, order: usize) -> WalkSeries {
    let n = g.n();
    let a = int_adjacency(g);
    let dm1 = degree_minus_one(g);
    let mut terms = vec![Matrix::identity(n)];
    if order >= 1 {
        terms.push(a.clone());
    }
    if order >= 2 {
        let d = Matrix::diagonal(g.degrees().into_iter().map(BigInt::from).collect());
        terms.push(sub(&mul(&a, &a), &d));
    }
    for r in 2..order {
        let next = sub(&mul(&a, &terms[r]), &mul(&dm1, &terms[r - 1]));
        terms.push(next);
    }
    WalkSeries { terms }
}

/// Checks `(Σ_{r≤R} t^r p_r)·(I - tA + t²(D - I)) ≡ (1 - t²)I (mod t^{R+1})`
/// coefficient by coefficient with the series on the left.
pub fn check_walk_identity(g: &Graph, order: usize) -> Result<bool, ZetaError> {
    if g.n() < 2 {
        return Err(ZetaError::TooSmall);
    }
    if !g.is_connected() {
        return Err(ZetaError::NotConnected);
    }
    let n = g.n();
    let s = reduced_walk_series(g, order);
    let a = int_adjacency(g);
    let dm1 = degree_minus_one(g);
    let id = Matrix::<BigInt>::identity(n);
    for r in 0..=order {
        let mut c = s.terms[r].clone();
        if r >= 1 {
            c = sub(&c, &mul(&s.terms[r - 1], &a));
        }
        if r >= 2 {
            c = c.try_add(&mul(&s.terms[r - 2], &dm1)).expect("same size");
        }
        let expected = match r {
            0 => id.clone(),
            2 => id.scale(&-BigInt::one()),
            _ => Matrix::zeros(n, n),
        };
        if c != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(det(I - tA + t²(D - I)), |E| - |V|)`. The Ihara zeta reciprocal is
/// `(1 - t²)^(|E| - |V|)` times the determinant.
pub fn ihara_reciprocal(g: &Graph) -> Result<(UniPoly, i64), ZetaError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(ZetaError::IsolatedVertex(v));
    }
    let n = g.n();
    let a = int_adjacency(g);
    let dm1 = degree_minus_one(g);
    // The determinant has degree at most 2n; interpolate from 2n + 1 values.
    let pts: Vec<(Rational, Rational)> = (0..=2 * n as i64)
        .map(|x| {
            let t = BigInt::from(x);
            let t2 = &t * &t;
            let m = Matrix::from_fn(n, n, |i, j| {
                let e = -(&t * &a[(i, j)]) + &t2 * &dm1[(i, j)];
                if i == j {
                    e + 1
                } else {
                    e
                }
            });
            (rat(x), Rational::from_integer(integer_det(&m)))
        })
        .collect();
    let det = UniPoly::interpolate(&pts);
    Ok((det, g.edge_count() as i64 - n as i64))
}

/// `{"det": [...], "exponent": m - n}` with integer coefficients as JSON
/// numbers (strings if they exceed 64 bits).
pub fn ihara_to_json(det: &UniPoly, exponent: i64) -> Value {
    let ints: Vec<Value> = det
        .coeffs()
        .iter()
        .map(|c| {
            let i = c.to_integer();
            i.to_i64()
                .map_or_else(|| json!(i.to_string()), |x| json!(x))
        })
        .collect();
    json!({"det": ints, "exponent": exponent})
}
