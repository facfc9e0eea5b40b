//! Scalar fields the linear algebra is generic over.
//!
//! Exact types (`BigRational`, `Rational64`) give certified ranks; the float
//! impls exist for quick numeric cross-checks and treat tiny values as zero.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed};

/// A field element usable in [`crate::linalg::Matrix`].
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn from_i64(value: i64) -> Self;

    /// Whether elimination should treat this entry as zero.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// Pivot preference: `true` if `self` is a strictly better pivot than `other`.
    /// Exact fields take the first nonzero entry.
    fn better_pivot_than(&self, _other: &Self) -> bool {
        false
    }

    /// True for fields where `rank` is a certificate rather than an estimate.
    const EXACT: bool;
}

impl Scalar for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    const EXACT: bool = true;
}

impl Scalar for Rational64 {
    fn from_i64(value: i64) -> Self {
        Rational64::from_integer(value)
    }
    const EXACT: bool = true;
}

macro_rules! float_scalar {
    ($t:ty, $eps:expr) => {
        impl Scalar for $t {
            fn from_i64(value: i64) -> Self {
                value as $t
            }
            fn is_negligible(&self) -> bool {
                self.abs() <= $eps
            }
            fn better_pivot_than(&self, other: &Self) -> bool {
                self.abs() > other.abs()
            }
            const EXACT: bool = false;
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);

/// Exact rationals with integer conversion helpers.
pub trait ExactScalar: Scalar + Signed {
    fn to_i64(&self) -> Option<i64>;
}

impl ExactScalar for BigRational {
    fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            i64::try_from(self.to_integer()).ok()
        } else {
            None
        }
    }
}

impl ExactScalar for Rational64 {
    fn to_i64(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }
}
