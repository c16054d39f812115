//! Exact arithmetic: rationals, the polynomial towers ℚ[μ], ℚ(μ), ℚ[μ][t],
//! ℚ(μ)[t], and dense matrices over them.

mod bipoly;
pub mod json;
mod matrix;
pub(crate) mod modular;
mod ops;
mod ratfn;
mod ratfnpoly;
mod rational;
mod ring;
mod unipoly;

pub use bipoly::BiPoly;
pub use matrix::{bareiss_det, mat_inverse_rational, Matrix};
pub use modular::integer_det;
pub use ratfn::RatFn;
pub use ratfnpoly::RatFnPoly;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use ring::{ExactDiv, Field, Ring};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed number {0:?}")]
    BadNumber(String),
    #[error("malformed JSON: {0}")]
    BadJson(String),
}

/// Monic gcd in ℚ[x]; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    a.gcd(b)
}

/// Substitutes μ := `mu0` coefficient-wise.
pub fn eval_mu(p: &BiPoly, mu0: &Rational) -> UniPoly {
    p.eval_mu(mu0)
}
