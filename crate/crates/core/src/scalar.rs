//! Scalar abstraction for the numeric kernels.

use std::fmt;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the whole crate is generic over.
///
/// Implemented for `f32` and `f64`. The `f64` lane is the one the CLI and
/// the acceptance thresholds are calibrated for; `f32` is available for
/// experiments where a narrower type suffices.
pub trait Real:
    Float + FromPrimitive + fmt::Debug + fmt::Display + fmt::LowerExp + 'static
{
    /// Lift an `f64` constant into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant not representable in scalar type")
    }

    /// Lift a count (step index, sample size) into `Self`.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count not representable in scalar type")
    }

    /// Best-effort widening to `f64`, for diagnostics and error messages.
    fn approx_f64(self) -> f64 {
        num_traits::cast(self).unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
