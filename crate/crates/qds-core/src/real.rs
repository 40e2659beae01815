//! Scalar abstraction: every numeric kernel is generic over the float width.

use std::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the library is generic over: `f32` or `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + Debug {}

impl Real for f32 {}
impl Real for f64 {}

/// Convert an `f64` literal into the working scalar.
pub(crate) fn lit<F: Real>(x: f64) -> F {
    F::from_f64(x).expect("f64 literal must be representable")
}

/// Widen a scalar for error payloads and diagnostics.
pub(crate) fn wide<F: Real>(x: F) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
