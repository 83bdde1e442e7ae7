//! Minimal ring abstractions shared by the polynomial engine and the
//! tautological ring.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{PPoly, Rational};

/// Coefficient ring of a sparse polynomial: has absolute zero and one.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `self / k` when the quotient stays in the ring.
    fn div_exact_i64(&self, k: i64) -> Option<Self>;
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = self
            .checked_add(*other)
            .expect("integer coefficient overflow");
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(*other)
            .expect("integer coefficient overflow")
    }
    fn neg_ref(&self) -> Self {
        self.checked_neg().expect("integer coefficient overflow")
    }
    fn div_exact_i64(&self, k: i64) -> Option<Self> {
        let k = k as i128;
        (k != 0 && self % k == 0).then(|| self / k)
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        crate::arith::int(v)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact_i64(&self, k: i64) -> Option<Self> {
        (k != 0).then(|| self / crate::arith::int(k))
    }
}

impl Coeff for PPoly {
    fn zero() -> Self {
        PPoly::zero()
    }
    fn one() -> Self {
        PPoly::one()
    }
    fn is_zero(&self) -> bool {
        PPoly::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        PPoly::from_int(v)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact_i64(&self, k: i64) -> Option<Self> {
        (k != 0).then(|| self.scale(&crate::arith::rat(1, k)))
    }
}

/// Element of a commutative ring whose zero and one are reachable from any
/// element (the ring may carry context such as a genus).
///
/// Determinants, Pfaffians and Q-classes are written against this trait so
/// they run unchanged over integers, polynomials, and tautological classes.
pub trait RingValue: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, k: i64) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

macro_rules! ring_value_via_coeff {
    ($t:ty) => {
        impl RingValue for $t {
            fn zero_like(&self) -> Self {
                <$t as Coeff>::zero()
            }
            fn one_like(&self) -> Self {
                <$t as Coeff>::one()
            }
            fn is_zero_value(&self) -> bool {
                Coeff::is_zero(self)
            }
            fn plus(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.add_assign_ref(other);
                out
            }
            fn times(&self, other: &Self) -> Self {
                self.mul_ref(other)
            }
            fn negated(&self) -> Self {
                self.neg_ref()
            }
            fn scaled(&self, k: i64) -> Self {
                self.mul_ref(&<$t as Coeff>::from_i64(k))
            }
        }
    };
}

ring_value_via_coeff!(i128);
ring_value_via_coeff!(Rational);
ring_value_via_coeff!(PPoly);
