//! The coefficient scalar abstraction.
//!
//! Every exact route in this crate is written once, generically over
//! [`Scalar`]. Instantiated with [`BigRational`] the routes are exact and
//! cross-route agreement is bit-level equality; instantiated with `f64` or
//! `f32` the same code gives a floating-point evaluation whose agreement is
//! judged with a relative tolerance.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

/// A field-like coefficient type usable by the integral routes.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Neg<Output = Self> + Send + Sync
{
    /// `numer / denom` as this scalar. `denom` must be nonzero.
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_ratio(&BigInt::from(value), &BigInt::from(1))
    }

    fn to_f64(&self) -> f64;

    /// Division that reports a zero divisor instead of panicking or
    /// producing a non-finite value.
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.clone() / rhs.clone())
        }
    }

    /// Whether two values produced by different routes count as equal.
    /// Exact scalars compare bit-for-bit.
    fn agrees(&self, other: &Self) -> bool;
}

impl Scalar for BigRational {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn agrees(&self, other: &Self) -> bool {
        self == other
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
                // go through the rational so huge double factorials do not
                // overflow before the division
                let q = BigRational::new(numer.clone(), denom.clone());
                ToPrimitive::to_f64(&q).unwrap_or(f64::NAN) as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn agrees(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= $tol * scale
            }
        }
    };
}

float_scalar!(f64, 1e-10);
float_scalar!(f32, 1e-4);

/// `true` when the rational is in lowest terms with a positive denominator.
pub fn is_canonical(q: &BigRational) -> bool {
    use num_integer::Integer;
    use num_traits::{One, Signed};
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}
