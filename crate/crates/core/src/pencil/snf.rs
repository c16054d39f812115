use serde_json::Value;

use crate::algebra::json::ratfnpoly_to_json;
use crate::algebra::{rat, BiPoly, Matrix, RatFnPoly, Rational, Ring, UniPoly};
use crate::graph::Graph;

use super::psi;

/// Invariant factors of `tI - (A - μD)` over ℚ(μ)[t], each monic (or zero),
/// each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PencilSnf {
    pub invariant_factors: Vec<RatFnPoly>,
}

impl PencilSnf {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.invariant_factors
                .iter()
                .map(ratfnpoly_to_json)
                .collect(),
        )
    }

    /// Product of the invariant factors.
    pub fn product(&self) -> RatFnPoly {
        self.invariant_factors
            .iter()
            .fold(RatFnPoly::one(), |acc, f| &acc * f)
    }
}

/// Invariant factors of the pencil of `g`.
///
/// `A - μD` is symmetric over an ordered field, so it is diagonalizable over
/// a real closure and every invariant factor is squarefree. The factors are
/// therefore the successive radicals of ψ: the last is `rad(ψ)`, the one
/// before is `rad(ψ / rad(ψ))`, and so on. [`snf_of`] runs general
/// elimination on the same matrix and agrees with this on every input.
pub fn snf_pencil(g: &Graph) -> PencilSnf {
    snf_from_psi(&psi(g))
}

/// Invariant factors of a pencil given its ψ; see [`snf_pencil`].
pub fn snf_from_psi(psi: &BiPoly) -> PencilSnf {
    let n = psi.deg_t().expect("ψ is monic");
    let mut rest = psi.clone();
    let mut radicals = Vec::new();
    while rest.deg_t().is_some_and(|d| d > 0) {
        let repeated = gcd_with_t_derivative(&rest);
        radicals.push(exact_div_monic(&rest, &repeated));
        rest = repeated;
    }
    let mut factors = vec![RatFnPoly::one(); n - radicals.len()];
    factors.extend(radicals.iter().rev().map(RatFnPoly::from));
    PencilSnf {
        invariant_factors: factors,
    }
}

fn t_derivative(p: &BiPoly) -> BiPoly {
    BiPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&rat(k as i64)))
            .collect(),
    )
}

/// `p / d` for `d` monic in t dividing `p` exactly.
fn exact_div_monic(p: &BiPoly, d: &BiPoly) -> BiPoly {
    let (m, q, r) = p.pseudo_div_rem(d);
    debug_assert!(m.is_one() && r.is_zero(), "inexact division");
    q
}

/// Monic gcd over ℚ(μ)[t] of `p` and `∂p/∂t`, where `p` is monic in t and
/// the coefficient of `t^k` has μ-degree at most `deg_t p - k` (true of every
/// factor of ψ). Any monic factor of degree `e` obeys the same bound, so the
/// gcd is recovered from `e + 1` specializations `μ = 0, 1, 2, ...` of matching
/// gcd degree and accepted only after exact division checks.
fn gcd_with_t_derivative(p: &BiPoly) -> BiPoly {
    let dp = t_derivative(p);
    let mut best = usize::MAX;
    let mut samples: Vec<(Rational, UniPoly)> = Vec::new();
    for x in 0i64.. {
        let mu0 = rat(x);
        let gx = p.eval_mu(&mu0).gcd(&dp.eval_mu(&mu0));
        let e = gx.degree().expect("p is monic");
        if e == 0 {
            return BiPoly::one();
        }
        if e > best {
            continue;
        }
        if e < best {
            best = e;
            samples.clear();
        }
        samples.push((mu0, gx));
        if samples.len() == e + 1 {
            let cand = BiPoly::from_coeffs(
                (0..=e)
                    .map(|k| {
                        let pts: Vec<_> = samples
                            .iter()
                            .map(|(m, g)| (m.clone(), g.coeff(k)))
                            .collect();
                        UniPoly::interpolate(&pts)
                    })
                    .collect(),
            );
            if p.pseudo_div_rem(&cand).2.is_zero() && dp.pseudo_div_rem(&cand).2.is_zero() {
                return cand;
            }
            // Every sample so far was a degenerate specialization.
            samples.remove(0);
        }
    }
    unreachable!("the sample loop only exits by returning")
}

/// Pivot order: smallest t-degree, then smallest total μ-degree, then
/// row-major position.
fn pivot_key(e: &BiPoly) -> Option<(usize, usize)> {
    let weight = e.coeffs().iter().filter_map(UniPoly::degree).sum();
    e.deg_t().map(|d| (d, weight))
}

/// Elimination state. Entries stay in ℚ[μ][t]: instead of dividing by
/// elements of ℚ[μ] (units of ℚ(μ)[t]) rows and columns are multiplied by
/// them, and each touched row or column is then divided by its μ-content.
struct Work {
    a: Vec<Vec<BiPoly>>,
    n: usize,
}

impl Work {
    fn best_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), usize, usize)> = None;
        for i in k..self.n {
            for j in k..self.n {
                if let Some(key) = pivot_key(&self.a[i][j]) {
                    if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
                        best = Some((key, i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn bring_to(&mut self, k: usize, (i, j): (usize, usize)) {
        self.a.swap(k, i);
        for row in &mut self.a {
            row.swap(k, j);
        }
    }

    /// `row_dst := m·row_dst - q·row_src` on columns `from..n`.
    fn row_op(&mut self, dst: usize, src: usize, m: &UniPoly, q: &BiPoly, from: usize) {
        let scaled = !m.is_one();
        for j in from..self.n {
            let mut e = if scaled {
                self.a[dst][j].scale_mu(m)
            } else {
                self.a[dst][j].clone()
            };
            if !self.a[src][j].is_zero() && !q.is_zero() {
                e = &e - &(q * &self.a[src][j]);
            }
            self.a[dst][j] = e;
        }
        if !m.is_constant() {
            let g = content_of((from..self.n).map(|j| &self.a[dst][j]));
            if !g.is_constant() {
                for j in from..self.n {
                    self.a[dst][j] = self.a[dst][j].div_mu_exact(&g);
                }
            }
        }
    }

    /// `col_dst := m·col_dst - q·col_src` on rows `from..n`.
    fn col_op(&mut self, dst: usize, src: usize, m: &UniPoly, q: &BiPoly, from: usize) {
        let scaled = !m.is_one();
        for i in from..self.n {
            let mut e = if scaled {
                self.a[i][dst].scale_mu(m)
            } else {
                self.a[i][dst].clone()
            };
            if !self.a[i][src].is_zero() && !q.is_zero() {
                e = &e - &(q * &self.a[i][src]);
            }
            self.a[i][dst] = e;
        }
        if !m.is_constant() {
            let g = content_of((from..self.n).map(|i| &self.a[i][dst]));
            if !g.is_constant() {
                for i in from..self.n {
                    self.a[i][dst] = self.a[i][dst].div_mu_exact(&g);
                }
            }
        }
    }

    /// Clears row and column `k` when the pivot has t-degree 0, i.e. is a
    /// unit of ℚ(μ)[t]. Column operations are not needed: they would only
    /// touch row `k`, which is then zeroed.
    fn eliminate_unit(&mut self, k: usize) {
        let p = self.a[k][k].coeff(0);
        let inv = p
            .is_constant()
            .then(|| UniPoly::constant(p.coeffs()[0].recip()));
        for i in k + 1..self.n {
            if self.a[i][k].is_zero() {
                continue;
            }
            let aik = self.a[i][k].clone();
            match &inv {
                Some(inv) => self.row_op(i, k, &UniPoly::one(), &aik.scale_mu(inv), k + 1),
                None => {
                    let g = p.gcd(&aik.content());
                    let m = p.div_rem(&g).0;
                    let q = aik.div_mu_exact(&g);
                    self.row_op(i, k, &m, &q, k + 1);
                }
            }
            self.a[i][k] = BiPoly::zero();
        }
        for j in k + 1..self.n {
            self.a[k][j] = BiPoly::zero();
        }
    }

    /// Reduces row and column `k` modulo the pivot. Returns `true` when both
    /// are now zero outside the pivot.
    fn reduce_cross(&mut self, k: usize) -> bool {
        let pivot = self.a[k][k].clone();
        let mut clean = true;
        for i in k + 1..self.n {
            if self.a[i][k].is_zero() {
                continue;
            }
            let (m, q, _) = self.a[i][k].pseudo_div_rem(&pivot);
            self.row_op(i, k, &m, &q, k);
            clean &= self.a[i][k].is_zero();
        }
        for j in k + 1..self.n {
            if self.a[k][j].is_zero() {
                continue;
            }
            let (m, q, _) = self.a[k][j].pseudo_div_rem(&pivot);
            self.col_op(j, k, &m, &q, k);
            clean &= self.a[k][j].is_zero();
        }
        clean
    }

    /// First trailing row holding an entry not divisible by the pivot.
    fn non_multiple(&self, k: usize) -> Option<usize> {
        let pivot = &self.a[k][k];
        (k + 1..self.n)
            .find(|&i| (k + 1..self.n).any(|j| !self.a[i][j].pseudo_div_rem(pivot).2.is_zero()))
    }
}

fn content_of<'a>(entries: impl Iterator<Item = &'a BiPoly>) -> UniPoly {
    let mut g = UniPoly::zero();
    for e in entries {
        for c in e.coeffs() {
            g = g.gcd(c);
            if g.is_constant() && !g.is_zero() {
                return g;
            }
        }
    }
    g
}

/// Smith normal form of a square matrix over ℚ[μ][t], computed over
/// ℚ(μ)[t].
pub fn snf_of(m: &Matrix<BiPoly>) -> PencilSnf {
    assert!(m.is_square(), "Smith normal form of a non-square matrix");
    let n = m.rows();
    let a = (0..n)
        .map(|i| (0..n).map(|j| m[(i, j)].clone()).collect())
        .collect();
    let mut w = Work { a, n };
    let mut factors = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            let Some(pos) = w.best_pivot(k) else {
                factors.resize(n, RatFnPoly::zero());
                return PencilSnf {
                    invariant_factors: factors,
                };
            };
            w.bring_to(k, pos);
            if w.a[k][k].deg_t() == Some(0) {
                w.eliminate_unit(k);
                break;
            }
            if !w.reduce_cross(k) {
                continue;
            }
            match w.non_multiple(k) {
                None => break,
                Some(i) => {
                    // Add row i into row k; the next pass sees a remainder.
                    w.row_op(k, i, &UniPoly::one(), &(-&BiPoly::one()), k);
                }
            }
        }
        factors.push(RatFnPoly::from(&w.a[k][k]).monic());
    }
    PencilSnf {
        invariant_factors: factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatFn;
    use crate::graph::enumerate::all_graphs;
    use crate::pencil::{char_matrix, pencil_matrix};

    fn from_bipoly(p: &BiPoly) -> RatFnPoly {
        RatFnPoly::from(p)
    }

    fn bi(rows: &[&[i64]]) -> BiPoly {
        BiPoly::from_coeffs(rows.iter().map(|r| UniPoly::from_ints(r)).collect())
    }

    fn chain_holds(s: &PencilSnf) -> bool {
        s.invariant_factors.windows(2).all(|w| {
            if w[1].is_zero() {
                true
            } else if w[0].is_zero() {
                false
            } else {
                w[1].div_rem(&w[0]).1.is_zero()
            }
        })
    }

    #[test]
    fn k1() {
        assert_eq!(
            snf_pencil(&Graph::empty(1)).invariant_factors,
            vec![RatFnPoly::t()]
        );
    }

    #[test]
    fn k2() {
        let s = snf_pencil(&Graph::complete(2));
        // (t + μ)² - 1
        let last = bi(&[&[-1, 0, 1], &[0, 2], &[1]]);
        assert_eq!(
            s.invariant_factors,
            vec![RatFnPoly::one(), from_bipoly(&last)]
        );
    }

    #[test]
    fn c3() {
        let s = snf_pencil(&Graph::cycle(3));
        let a = bi(&[&[1, 2], &[1]]); // t + 2μ + 1
        let b = bi(&[&[-2, 2], &[1]]); // t + 2μ - 2
        assert_eq!(
            s.invariant_factors,
            vec![RatFnPoly::one(), from_bipoly(&a), from_bipoly(&(&a * &b))]
        );
    }

    #[test]
    fn empty_graph_is_all_t() {
        let s = snf_pencil(&Graph::empty(3));
        assert_eq!(s.invariant_factors, vec![RatFnPoly::t(); 3]);
    }

    #[test]
    fn singular_input_gives_zero_factors() {
        let m = Matrix::from_fn(2, 2, |_, _| BiPoly::t());
        let s = snf_of(&m);
        assert_eq!(s.invariant_factors, vec![RatFnPoly::t(), RatFnPoly::zero()]);
        assert!(chain_holds(&s));
    }

    #[test]
    fn non_unit_pivots_take_the_gcd() {
        // diag(t, t + μ) has invariant factors 1, t(t + μ).
        let m = Matrix::diagonal(vec![BiPoly::t(), bi(&[&[0, 1], &[1]])]);
        let s = snf_of(&m);
        assert_eq!(s.invariant_factors[0], RatFnPoly::one());
        assert_eq!(
            s.invariant_factors[1],
            from_bipoly(&bi(&[&[], &[0, 1], &[1]]))
        );
        // diag(μt, t²) has invariant factors t, t².
        let m = Matrix::diagonal(vec![bi(&[&[], &[0, 1]]), bi(&[&[], &[], &[1]])]);
        let s = snf_of(&m);
        assert_eq!(
            s.invariant_factors,
            vec![RatFnPoly::t(), &RatFnPoly::t() * &RatFnPoly::t()]
        );
        assert!(s.invariant_factors.iter().all(RatFnPoly::is_monic));
        let _ = RatFn::one();
    }

    #[test]
    fn product_is_psi_on_small_graphs() {
        for g in [
            Graph::cycle(5),
            Graph::path(4),
            Graph::star(3),
            Graph::complete(4),
        ] {
            let s = snf_pencil(&g);
            assert!(chain_holds(&s));
            assert_eq!(s.product(), from_bipoly(&psi(&g)));
        }
    }

    #[test]
    fn radical_chain_matches_elimination() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                let direct = snf_of(&char_matrix(&pencil_matrix(&g)));
                assert_eq!(snf_pencil(&g), direct, "{g:?}");
            }
        }
    }
}
