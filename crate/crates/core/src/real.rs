//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Converts an `f64` literal. Panics only for non-representable values, which
    /// cannot happen for `f32`/`f64`.
    #[inline]
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("usize representable")
    }

    /// Rescales a tolerance calibrated for `f64` to this type's precision.
    /// Identity for `f64`.
    #[inline]
    fn tol(v: f64) -> Self {
        let eps = Self::epsilon().to_f64().unwrap_or(f64::EPSILON);
        Self::c(if eps <= f64::EPSILON { v } else { v.max(8.0 * eps) })
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
