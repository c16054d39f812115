use std::fmt;

use num_traits::Zero;

use super::ops::impl_ring_ops;
use super::{ExactDiv, Rational, UniPoly};

/// Polynomial in `t` with coefficients in ℚ[μ]. `coeffs[i]` is the
/// coefficient of `t^i`, itself a polynomial in μ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_mu(UniPoly::one())
    }

    pub fn t() -> Self {
        Self::from_coeffs(vec![UniPoly::zero(), UniPoly::one()])
    }

    pub fn mu() -> Self {
        Self::from_mu(UniPoly::x())
    }

    pub fn from_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// A t-free element.
    pub fn from_mu(p: UniPoly) -> Self {
        Self::from_coeffs(vec![p])
    }

    /// Lifts a polynomial in `t` with rational coefficients.
    pub fn from_t(p: &UniPoly) -> Self {
        Self::from_coeffs(p.coeffs().iter().cloned().map(UniPoly::constant).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_mu(UniPoly::constant(c))
    }

    /// `a + b·μ`, the shape of every pencil matrix entry.
    pub fn linear_mu(a: i64, b: i64) -> Self {
        Self::from_mu(UniPoly::from_ints(&[a, b]))
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^i`.
    pub fn coeff(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_mu(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    pub fn leading_t(&self) -> Option<&UniPoly> {
        self.coeffs.last()
    }

    /// Substitutes μ := `mu0`, leaving a polynomial in `t`.
    pub fn eval_mu(&self, mu0: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(mu0)).collect())
    }

    /// Substitutes t := `t0`, leaving a polynomial in μ.
    pub fn eval_t(&self, t0: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(t0) + c;
        }
        acc
    }

    pub fn scale_mu(&self, p: &UniPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c * p).collect())
    }

    pub fn shift_t(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Pseudo-division in `t`: returns `(m, q, r)` with `m·self = q·divisor + r`,
    /// `m` a nonzero element of ℚ[μ] and `deg_t r < deg_t divisor`. When the
    /// divisor's leading coefficient is a rational constant, `m = 1`.
    ///
    /// Panics when `divisor` is zero.
    pub fn pseudo_div_rem(&self, divisor: &Self) -> (UniPoly, Self, Self) {
        let dd = divisor.deg_t().expect("division by zero polynomial");
        let lc = &divisor.coeffs[dd];
        let mut mult = UniPoly::one();
        let mut quot = Self::zero();
        let mut rem = self.clone();
        if lc.is_constant() {
            let inv = UniPoly::constant(lc.coeffs()[0].recip());
            while let Some(dr) = rem.deg_t().filter(|&d| d >= dd) {
                let c = &rem.coeffs[dr] * &inv;
                let term = Self::from_mu(c).shift_t(dr - dd);
                rem = &rem - &(&term * divisor);
                quot = &quot + &term;
            }
            return (mult, quot, rem);
        }
        while let Some(dr) = rem.deg_t().filter(|&d| d >= dd) {
            let c = &rem.coeffs[dr];
            let g = lc.gcd(c);
            let l = lc.div_rem(&g).0;
            let c = c.div_rem(&g).0;
            let term = Self::from_mu(c).shift_t(dr - dd);
            rem = &rem.scale_mu(&l) - &(&term * divisor);
            quot = &quot.scale_mu(&l) + &term;
            mult = &mult * &l;
        }
        (mult, quot, rem)
    }

    /// Monic gcd in ℚ[μ] of every μ-coefficient; zero for the zero polynomial.
    pub fn content(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `p`, which must divide each exactly.
    pub fn div_mu_exact(&self, p: &UniPoly) -> Self {
        if p.is_constant() {
            return self.scale_mu(&UniPoly::constant(p.coeffs()[0].recip()));
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(p);
                    debug_assert!(r.is_zero(), "inexact division by a μ-polynomial");
                    q
                })
                .collect(),
        )
    }

    fn add_ref(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            if !s.is_zero() {
                *c = &*c + s;
            }
        }
        Self::from_coeffs(coeffs)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Flat convolution over (t, mu) avoids allocating a UniPoly per term.
        let mu_a = self.deg_mu().unwrap_or(0) + 1;
        let mu_b = other.deg_mu().unwrap_or(0) + 1;
        let mu_len = mu_a + mu_b - 1;
        let t_len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut acc = vec![Rational::zero(); t_len * mu_len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let row = (i + j) * mu_len;
                for (k, x) in a.coeffs().iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (l, y) in b.coeffs().iter().enumerate() {
                        if !y.is_zero() {
                            acc[row + k + l] += x * y;
                        }
                    }
                }
            }
        }
        let mut it = acc.into_iter();
        let coeffs = (0..t_len)
            .map(|_| UniPoly::from_coeffs(it.by_ref().take(mu_len).collect()))
            .collect();
        Self::from_coeffs(coeffs)
    }

    fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl_ring_ops!(BiPoly);

impl ExactDiv for BiPoly {
    /// Long division in `t` over ℚ[μ]; each quotient coefficient must come out
    /// of an exact division in ℚ[μ].
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.deg_t()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lc = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let nd = rem.len() - 1;
        if nd < dd {
            return None;
        }
        let mut quot = vec![UniPoly::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = rem[k + dd].exact_div(lc)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&c * d);
                }
            }
            quot[k] = c;
        }
        rem.iter()
            .all(UniPoly::is_zero)
            .then(|| Self::from_coeffs(quot))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({})", c.display_in("mu"))?,
                1 => write!(f, "({})*t", c.display_in("mu"))?,
                _ => write!(f, "({})*t^{i}", c.display_in("mu"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    /// (t + μ)^2 - 1
    fn sample() -> BiPoly {
        let t_plus_mu = &BiPoly::t() + &BiPoly::mu();
        &t_plus_mu.pow(2) - &BiPoly::one()
    }

    #[test]
    fn eval_mu_examples() {
        assert_eq!(sample().eval_mu(&rat(0)), UniPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(sample().eval_mu(&rat(1)), UniPoly::from_ints(&[0, 2, 1]));
        assert_eq!(
            BiPoly::t().pow(3).eval_mu(&rat(5)),
            UniPoly::from_ints(&[0, 0, 0, 1])
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(sample().deg_t(), Some(2));
        assert_eq!(sample().deg_mu(), Some(2));
        assert_eq!(BiPoly::zero().deg_t(), None);
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = &BiPoly::t() + &BiPoly::mu();
        let b = &BiPoly::t() - &BiPoly::mu();
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!((&prod + &BiPoly::one()).exact_div(&a), None);
        assert_eq!(prod.exact_div(&BiPoly::zero()), None);
    }

    fn small_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, 0..4), 0..4).prop_map(|rows| {
            BiPoly::from_coeffs(rows.iter().map(|r| UniPoly::from_ints(r)).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_bipoly(), b in small_bipoly(), c in small_bipoly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn multiply_then_divide(a in small_bipoly(), b in small_bipoly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
        }

        #[test]
        fn pseudo_division_identity(a in small_bipoly(), b in small_bipoly()) {
            prop_assume!(!b.is_zero());
            let (m, q, r) = a.pseudo_div_rem(&b);
            prop_assert!(!m.is_zero());
            prop_assert_eq!(a.scale_mu(&m), &(&q * &b) + &r);
            prop_assert!(r.deg_t().is_none_or(|d| d < b.deg_t().unwrap()));
        }

        #[test]
        fn content_divides(a in small_bipoly(), c in prop::collection::vec(-3i64..=3, 1..3)) {
            let c = UniPoly::from_ints(&c);
            prop_assume!(!c.is_zero() && !a.is_zero());
            let scaled = a.scale_mu(&c);
            let g = scaled.content();
            prop_assert!(c.monic().div_rem(&g).1.is_zero() || g.div_rem(&c.monic()).1.is_zero());
            prop_assert_eq!(scaled.div_mu_exact(&g).scale_mu(&g), scaled);
        }
    }
}
