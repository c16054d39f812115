use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ops::impl_ring_ops;
use super::{rat, ExactDiv, Rational};

/// Dense univariate polynomial over ℚ. `coeffs[i]` is the coefficient of
/// `x^i`; the zero polynomial has no coefficients and the last stored
/// coefficient is never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
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
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Runs a primitive remainder sequence over ℤ[x] so coefficient sizes stay
    /// bounded by the inputs instead of growing through rational arithmetic.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = (primitive_int(&self.coeffs), primitive_int(&other.coeffs));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = int_pseudo_rem(a, &b);
            if r.is_empty() {
                break;
            }
            a = b;
            b = primitive_int_of(r);
        }
        if b.len() == 1 {
            return Self::one();
        }
        Self::from_coeffs(b.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Unique polynomial of degree below `points.len()` through the given
    /// `(x, y)` pairs (Newton form). The `x` values must be distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let n = points.len();
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = &dd[i] - &dd[i - 1];
                let den = &points[i].0 - &points[i - level].0;
                assert!(!den.is_zero(), "interpolation nodes must be distinct");
                dd[i] = num / den;
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            let lin = Self::from_coeffs(vec![-points[i].0.clone(), Rational::one()]);
            acc = &(&acc * &lin) + &Self::constant(dd[i].clone());
        }
        acc
    }

    /// Largest absolute value among the coefficients; zero for the zero polynomial.
    pub fn height(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    fn add_ref(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
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
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
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

impl_ring_ops!(UniPoly);

impl ExactDiv for UniPoly {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl From<Rational> for UniPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl UniPoly {
    /// Renders with the given variable name, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

/// Integer primitive part of a nonzero rational coefficient vector with a
/// positive leading coefficient.
fn primitive_int(coeffs: &[Rational]) -> Vec<BigInt> {
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    primitive_int_of(coeffs.iter().map(|c| (c * &l).to_integer()).collect())
}

fn primitive_int_of(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    if !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` over ℤ[x] with trailing zeros trimmed;
/// `b` must have degree at least 1 and `a` must not be shorter than `b`.
fn int_pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    while a.len() >= b.len() {
        let la = a.pop().expect("nonempty");
        let shift = a.len() - db;
        if !la.is_zero() {
            for c in a.iter_mut() {
                *c *= lb;
            }
            for (i, bc) in b[..db].iter().enumerate() {
                a[shift + i] -= &la * bc;
            }
        }
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(mu^2 - 1, mu - 1) = mu - 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        // gcd(p, 0) is p made monic
        assert_eq!(
            p(&[2, 4]).gcd(&UniPoly::zero()),
            UniPoly::from_coeffs(vec![super::super::ratio(1, 2), rat(1)])
        );
        // mu^2 + 1 = (mu + 2)(mu - 2) + 5
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[2, 1])), UniPoly::one());
        assert!(UniPoly::zero().gcd(&UniPoly::zero()).is_zero());
    }

    #[test]
    fn div_rem_by_hand() {
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[2, 1]));
        assert_eq!(q, p(&[-2, 1]));
        assert_eq!(r, p(&[5]));
    }

    #[test]
    fn trims_trailing_zeros() {
        assert!(p(&[0, 0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!((p(&[1, 1]) - p(&[1, 1])).degree(), None);
    }

    #[test]
    fn reflect_and_display() {
        assert_eq!(p(&[0, -2, 1]).reflect(), p(&[0, 2, 1]));
        assert_eq!(p(&[-1, 0, 1]).display_in("t"), "t^2 - 1");
        assert_eq!(p(&[0, 0, 0, 0, 0, 1]).display_in("t"), "t^5");
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-5i64..=5, 0..6).prop_map(|c| UniPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn distributive(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn division_identity(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }

        #[test]
        fn interpolation_recovers_polynomial(a in small_poly()) {
            let pts: Vec<(Rational, Rational)> = (0..=a.degree().unwrap_or(0) as i64 + 1)
                .map(|x| (rat(x), a.eval(&rat(x))))
                .collect();
            prop_assert_eq!(UniPoly::interpolate(&pts), a);
        }

        #[test]
        fn gcd_is_greatest(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!c.is_zero());
            let g = (&a * &c).gcd(&(&b * &c));
            prop_assert!(g.div_rem(&c).1.is_zero());
        }

        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly()) {
            let g = a.gcd(&b);
            if !g.is_zero() {
                prop_assert!(a.exact_div(&g).is_some());
                prop_assert!(b.exact_div(&g).is_some());
                prop_assert!(g.leading().unwrap().is_one());
            }
        }
    }
}
