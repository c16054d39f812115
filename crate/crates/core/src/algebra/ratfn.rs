use std::fmt;

use num_traits::One;

use super::ops::impl_ring_ops;
use super::{Field, Rational, UniPoly};

/// Element of ℚ(μ) in canonical form: `gcd(num, den) = 1`, `den` monic.
///
/// Because the form is canonical, derived equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: UniPoly,
    den: UniPoly,
}

impl RatFn {
    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_poly(num: UniPoly) -> Self {
        Self {
            num,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// Reduces `num/den`. Returns `None` when `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Option<Self> {
        let lc = den.leading()?.clone();
        if num.is_zero() {
            return Some(Self::zero());
        }
        if den.is_constant() {
            let inv = lc.recip();
            return Some(Self::from_poly(num.scale(&inv)));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let inv = den.leading().expect("nonzero").recip();
        Some(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    /// Degree of numerator plus degree of denominator; a size measure used
    /// for pivot selection.
    pub fn weight(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_poly() && other.is_poly() {
            return Self::from_poly(&self.num + &other.num);
        }
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone()).expect("nonzero den");
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero den")
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_poly() && other.is_poly() {
            return Self::from_poly(&self.num * &other.num);
        }
        // Cross-cancel before multiplying so the final gcd stays small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = other.den.div_rem(&g1).0;
        let n2 = other.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        let den = &d1 * &d2;
        let inv = den.leading().expect("nonzero").recip();
        Self {
            num: (&n1 * &n2).scale(&inv),
            den: den.scale(&inv),
        }
    }

    fn neg_ref(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul_ref(&other.inv()?))
    }

    pub fn eval(&self, mu0: &Rational) -> Option<Rational> {
        let d = self.den.eval(mu0);
        (d != Rational::from_integer(0.into())).then(|| self.num.eval(mu0) / d)
    }
}

impl_ring_ops!(RatFn);

impl Field for RatFn {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let lc = self.num.leading().expect("nonzero").clone();
        if lc.is_one() {
            Some(Self {
                num: self.den.clone(),
                den: self.num.clone(),
            })
        } else {
            let inv = lc.recip();
            Some(Self {
                num: self.den.scale(&inv),
                den: self.num.scale(&inv),
            })
        }
    }
}

impl From<UniPoly> for RatFn {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.num.display_in("mu"))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.display_in("mu"),
                self.den.display_in("mu")
            )
        }
    }
}
