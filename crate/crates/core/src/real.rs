//! Scalar abstraction: every numeric routine in this crate is generic over
//! [`Real`], which is implemented for `f32` and `f64`. Tolerance-critical
//! work (everything in the test suites) runs in `f64`.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar type for the whole crate.
pub trait Real:
    Float + FloatConst + FromPrimitive + core::fmt::Debug + core::fmt::Display + 'static
{
    /// Convert an `f64` constant into `Self`.
    ///
    /// Shorthand for `Self::from_f64(v).unwrap()`; all call sites pass
    /// literals that are representable in `f32` and `f64`.
    #[inline]
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Machine epsilon of the scalar type.
    #[inline]
    fn eps() -> Self {
        Self::epsilon()
    }
}

impl Real for f32 {}
impl Real for f64 {}
