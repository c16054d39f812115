//! Operator plumbing shared by the polynomial types.
//!
//! Each type provides inherent `add_ref`, `sub_ref`, `mul_ref` and `neg_ref`;
//! the macro derives the std operators for every owned/borrowed combination
//! and the [`Ring`](super::Ring) impl.

macro_rules! impl_ring_ops {
    ($t:ty) => {
        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl std::ops::Add<$t> for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                self.add_ref(&rhs)
            }
        }
        impl<'a> std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl std::ops::Sub<$t> for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                self.sub_ref(&rhs)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl std::ops::Mul<$t> for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                self.mul_ref(&rhs)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl<'a> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl $crate::algebra::Ring for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                self.add_ref(other)
            }
            fn sub(&self, other: &Self) -> Self {
                self.sub_ref(other)
            }
            fn mul(&self, other: &Self) -> Self {
                self.mul_ref(other)
            }
            fn neg(&self) -> Self {
                self.neg_ref()
            }
        }
    };
}

pub(crate) use impl_ring_ops;
