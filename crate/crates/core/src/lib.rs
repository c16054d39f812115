//! Exact analysis of the graph matrix pencil `A - μD`.
//!
//! The crate computes generalized characteristic polynomials
//! `ψ(X, t, μ) = det(tI - (A - μD))`, Smith normal forms of `tI - (A - μD)`
//! over ℚ(μ)[t], reduced-walk series and Ihara zeta polynomials. It also
//! builds pairs of degree-similar graphs together with explicit rational
//! matrices `M` satisfying `M⁻¹A₁M = A₂` and `M⁻¹D₁M = D₂`, and refutes
//! degree similarity through a battery of necessary conditions.
//!
//! Nothing here uses floating point.

pub mod algebra;
pub mod certify;
pub mod graph;
pub mod pencil;
pub mod zeta;
