use std::fmt;

use super::ops::impl_ring_ops;
use super::{BiPoly, ExactDiv, Field, RatFn, Ring};

/// Polynomial in `t` over the field ℚ(μ). This is the principal ideal domain
/// in which pencil Smith normal forms live.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatFnPoly {
    coeffs: Vec<RatFn>,
}

impl RatFnPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RatFn::one())
    }

    pub fn t() -> Self {
        Self::from_coeffs(vec![RatFn::zero(), RatFn::one()])
    }

    pub fn constant(c: RatFn) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<RatFn>) -> Self {
        while coeffs.last().is_some_and(RatFn::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[RatFn] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&RatFn> {
        self.coeffs.last()
    }

    /// Sum of numerator and denominator μ-degrees over all coefficients.
    pub fn mu_weight(&self) -> usize {
        self.coeffs.iter().map(RatFn::weight).sum()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &RatFn) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let lc_inv = divisor.coeffs[dd].inv().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RatFn::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = &rem[k + dd] * &lc_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&c * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Converts back to ℚ[μ][t] when every coefficient is a polynomial.
    pub fn to_bipoly(&self) -> Option<BiPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_poly().then(|| c.num().clone()))
            .collect::<Option<Vec<_>>>()
            .map(BiPoly::from_coeffs)
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
        let mut coeffs = vec![RatFn::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl_ring_ops!(RatFnPoly);

impl ExactDiv for RatFnPoly {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl From<&BiPoly> for RatFnPoly {
    fn from(p: &BiPoly) -> Self {
        Self::from_coeffs(p.coeffs().iter().cloned().map(RatFn::from_poly).collect())
    }
}

impl fmt::Display for RatFnPoly {
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
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UniPoly;

    #[test]
    fn gcd_over_rational_functions() {
        // (t + mu)(t - 1) and (t + mu)(t + 1) share t + mu.
        let t_mu = RatFnPoly::from(&(&BiPoly::t() + &BiPoly::mu()));
        let a = &t_mu * &RatFnPoly::from(&(&BiPoly::t() - &BiPoly::one()));
        let b = &t_mu * &RatFnPoly::from(&(&BiPoly::t() + &BiPoly::one()));
        assert_eq!(a.gcd(&b), t_mu);
    }

    #[test]
    fn monic_divides_out_mu_leading_coefficient() {
        // mu*t + 1 -> t + 1/mu
        let p = RatFnPoly::from_coeffs(vec![RatFn::one(), RatFn::from_poly(UniPoly::x())]);
        let m = p.monic();
        assert!(m.is_monic());
        assert_eq!(
            m.coeffs()[0],
            RatFn::new(UniPoly::one(), UniPoly::x()).unwrap()
        );
        assert!(m.to_bipoly().is_none());
    }
}
