//! Scalar abstraction for the spectral layer.
//!
//! Graph construction is purely combinatorial; everything that touches a
//! transition matrix is generic over [`Real`] so the same code runs in `f32`
//! or `f64`. The crate root exports `f64` aliases for the common case.

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    nalgebra::RealField + num_traits::FromPrimitive + num_traits::ToPrimitive + Copy
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub fn cast<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}
