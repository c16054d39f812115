//! The pencil `A - μD` of a graph: its characteristic polynomial ψ, the
//! classical characteristic polynomials it specializes to, and its Smith
//! normal form over ℚ(μ)[t].

mod snf;

pub use snf::{snf_from_psi, snf_of, snf_pencil, PencilSnf};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::json::{bipoly_to_json, unipoly_to_json};
use crate::algebra::modular::{
    charpoly_mod, crt_symmetric, interpolate_mod, primes, primes_for_bits,
};
use crate::algebra::{bareiss_det, integer_det, rat, BiPoly, Matrix, Rational, UniPoly};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PencilError {
    #[error("graph has an isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// `A_μ = A - μD` with entries in ℚ[μ][t] (constant in t).
pub fn pencil_matrix(g: &Graph) -> Matrix<BiPoly> {
    Matrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            BiPoly::linear_mu(0, -(g.degree(i) as i64))
        } else if g.has_edge(i, j) {
            BiPoly::one()
        } else {
            BiPoly::zero()
        }
    })
}

/// `tI - m` for a square matrix over ℚ[μ][t].
pub fn char_matrix(m: &Matrix<BiPoly>) -> Matrix<BiPoly> {
    Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        let e = -&m[(i, j)];
        if i == j {
            &e + &BiPoly::t()
        } else {
            e
        }
    })
}

/// `φ(m) = det(tI - m)`.
pub fn phi(m: &Matrix<BiPoly>) -> Result<BiPoly, PencilError> {
    bareiss_det(&char_matrix(m)).map_err(|e| PencilError::DimensionMismatch(e.to_string()))
}

/// `ψ(X, t, μ) = det(tI - (A - μD))`.
///
/// Computed modulo word-size primes and lifted. Modulo each prime, the
/// characteristic polynomials of `A - μ₀D` for `μ₀ = 0, 1, ..., n` give
/// every coefficient of `tᵏ`, a polynomial in μ of degree at most `n - k`,
/// by interpolation. Row `i` of `tI - A + μD` has coefficient sum
/// `1 + 2dᵢ` in absolute value, so `∏(1 + 2dᵢ)` bounds every integer
/// coefficient of ψ. [`phi`] computes the same determinant directly.
pub fn psi(g: &Graph) -> BiPoly {
    let n = g.n();
    let degrees = g.degrees();
    let bits: u64 = degrees
        .iter()
        .map(|&d| u64::from(usize::BITS - (1 + 2 * d).leading_zeros()))
        .sum();
    let table = primes();
    let count = primes_for_bits(bits);
    assert!(
        count <= table.len(),
        "graph too large for the tabulated primes"
    );
    let primes = &table[..count];
    // residues[prime][k][j]: coefficient of tᵏμʲ.
    let residues: Vec<Vec<Vec<u64>>> = primes
        .iter()
        .map(|&p| {
            let samples: Vec<Vec<u64>> = (0..=n as u64)
                .map(|mu| {
                    let m = (0..n * n)
                        .map(|k| {
                            let (i, j) = (k / n, k % n);
                            if i == j {
                                (p - mu * degrees[i] as u64 % p) % p
                            } else {
                                u64::from(g.has_edge(i, j))
                            }
                        })
                        .collect();
                    charpoly_mod(m, n, p)
                })
                .collect();
            (0..=n)
                .map(|k| {
                    let ys: Vec<u64> = samples[..=n - k].iter().map(|c| c[k]).collect();
                    interpolate_mod(&ys, p)
                })
                .collect()
        })
        .collect();
    let mut rs = vec![0u64; count];
    BiPoly::from_coeffs(
        (0..=n)
            .map(|k| {
                UniPoly::from_coeffs(
                    (0..=n - k)
                        .map(|j| {
                            for (slot, r) in rs.iter_mut().zip(&residues) {
                                *slot = r[k][j];
                            }
                            Rational::from_integer(crt_symmetric(primes, &rs))
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

/// `det(tI - m)` over ℚ[t] for a rational matrix. With `L` the common
/// denominator of `m`, the values `det(xI - Lm) = Lⁿ·det((x/L)I - m)` at
/// `x = 0, 1, ..., n` are integer determinants.
fn rational_charpoly(m: &Matrix<Rational>) -> UniPoly {
    let n = m.rows();
    let l = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .fold(BigInt::one(), |acc, (i, j)| acc.lcm(m[(i, j)].denom()));
    let lm = Matrix::from_fn(n, n, |i, j| (&m[(i, j)] * &l).to_integer());
    let pts: Vec<(Rational, Rational)> = (0..=n as i64)
        .map(|x| {
            let c = Matrix::from_fn(n, n, |i, j| {
                let e = -&lm[(i, j)];
                if i == j {
                    e + x
                } else {
                    e
                }
            });
            (rat(x), Rational::from_integer(integer_det(&c)))
        })
        .collect();
    // p(x) = Lⁿ·χ(x/L), so χ's coefficient of tᵏ is p's divided by L^(n-k).
    let scaled = UniPoly::interpolate(&pts);
    let lr = Rational::from_integer(l);
    UniPoly::from_coeffs(
        (0..=n)
            .map(|k| scaled.coeff(k) / num_traits::pow(lr.clone(), n - k))
            .collect(),
    )
}

pub fn adjacency_charpoly(g: &Graph) -> UniPoly {
    rational_charpoly(&g.adjacency_matrix())
}

/// Characteristic polynomial of the Laplacian `D - A`.
pub fn laplacian_charpoly(g: &Graph) -> UniPoly {
    rational_charpoly(
        &g.degree_matrix()
            .try_sub(&g.adjacency_matrix())
            .expect("same shape"),
    )
}

/// Characteristic polynomial of the signless Laplacian `D + A`.
pub fn signless_charpoly(g: &Graph) -> UniPoly {
    rational_charpoly(
        &g.degree_matrix()
            .try_add(&g.adjacency_matrix())
            .expect("same shape"),
    )
}

/// `det(tD - A)`. Its roots are the eigenvalues of `D^{-1/2} A D^{-1/2}`
/// (with leading coefficient `det D`), so it carries the normalized
/// spectrum without leaving ℚ[t].
pub fn deg_scaled_charpoly(g: &Graph) -> Result<UniPoly, PencilError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(PencilError::IsolatedVertex(v));
    }
    let m = Matrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            UniPoly::monomial(rat(g.degree(i) as i64), 1)
        } else if g.has_edge(i, j) {
            UniPoly::constant(rat(-1))
        } else {
            UniPoly::zero()
        }
    });
    Ok(bareiss_det(&m).expect("square"))
}

/// ψ plus the four classical characteristic polynomials and the degree
/// multiset of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralProfile {
    pub psi: BiPoly,
    pub adj_charpoly: UniPoly,
    pub lap_charpoly: UniPoly,
    pub signless_charpoly: UniPoly,
    /// `None` when the graph has an isolated vertex.
    pub deg_scaled_charpoly: Option<UniPoly>,
    pub degree_multiset: Vec<usize>,
}

impl SpectralProfile {
    pub fn to_json(&self) -> Value {
        json!({
            "psi": bipoly_to_json(&self.psi),
            "adjCharpoly": unipoly_to_json(&self.adj_charpoly),
            "lapCharpoly": unipoly_to_json(&self.lap_charpoly),
            "signlessCharpoly": unipoly_to_json(&self.signless_charpoly),
            "degScaledCharpoly": self.deg_scaled_charpoly.as_ref().map(unipoly_to_json),
            "degreeMultiset": self.degree_multiset,
        })
    }
}

pub fn charpolys(g: &Graph) -> SpectralProfile {
    SpectralProfile {
        psi: psi(g),
        adj_charpoly: adjacency_charpoly(g),
        lap_charpoly: laplacian_charpoly(g),
        signless_charpoly: signless_charpoly(g),
        deg_scaled_charpoly: deg_scaled_charpoly(g).ok(),
        degree_multiset: g.degree_multiset(),
    }
}

/// `det(tI - [[0, xᵀ], [y, m]])`.
pub fn bordered_charpoly(
    m: &Matrix<BiPoly>,
    x: &[BiPoly],
    y: &[BiPoly],
) -> Result<BiPoly, PencilError> {
    let n = m.rows();
    if !m.is_square() || x.len() != n || y.len() != n {
        return Err(PencilError::DimensionMismatch(format!(
            "{}x{} matrix bordered by vectors of length {} and {}",
            m.rows(),
            m.cols(),
            x.len(),
            y.len()
        )));
    }
    let bordered = Matrix::from_fn(n + 1, n + 1, |i, j| match (i, j) {
        (0, 0) => BiPoly::zero(),
        (0, j) => x[j - 1].clone(),
        (i, 0) => y[i - 1].clone(),
        (i, j) => m[(i - 1, j - 1)].clone(),
    });
    phi(&bordered)
}

/// Whether the pencils of `g` and `h` are similar over ℚ(μ), decided by
/// comparing Smith normal forms. This is weaker than degree similarity.
pub fn pencil_similar(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && snf_pencil(g) == snf_pencil(h)
}

/// `(-1)^n p(-t)`: turns the characteristic polynomial of `M` into that of
/// `-M`.
pub fn reflect_charpoly(p: &UniPoly) -> UniPoly {
    let r = p.reflect();
    match p.degree() {
        Some(n) if n % 2 == 1 => -&r,
        _ => r,
    }
}
