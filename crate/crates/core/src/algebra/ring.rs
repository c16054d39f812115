use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Commutative ring with identity, operated on by reference.
///
/// The polynomial towers implement this so that matrix routines (products,
/// Kronecker products, fraction-free determinants) can be written once.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Division that is only defined when the divisor divides the dividend.
pub trait ExactDiv: Ring {
    /// Returns `None` when `divisor` is zero or does not divide `self`.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

macro_rules! ring_via_num {
    ($t:ty) => {
        impl Ring for $t {
            fn zero() -> Self {
                <$t as Zero>::zero()
            }
            fn one() -> Self {
                <$t as One>::one()
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn neg(&self) -> Self {
                -self
            }
        }
    };
}

ring_via_num!(BigInt);
ring_via_num!(Rational);

impl ExactDiv for BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!Zero::is_zero(divisor)).then(|| self / divisor)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}
