//! Scalar abstraction shared by the numeric modules.
//!
//! Every numeric routine in this crate is written against [`Real`], which is
//! implemented for `f32` and `f64`. Tolerances that must make sense for both
//! precisions are derived from the machine epsilon through the helpers below.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Lossless-enough conversion to `f64` for reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// `max(floor, factor * epsilon)`; picks a fixed tolerance for `f64`
    /// and falls back to an epsilon multiple for lower precisions.
    fn tolerance(floor: f64, factor: f64) -> Self {
        let scaled = Self::epsilon() * Self::lit(factor);
        let floor = Self::lit(floor);
        if scaled > floor {
            scaled
        } else {
            floor
        }
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Unit complex number `e^{i theta}`.
pub fn unit<T: Real>(theta: T) -> Complex<T> {
    Complex::from_polar(T::one(), theta)
}

/// `z / |z|`, or one when `z` vanishes.
pub fn phase<T: Real>(z: Complex<T>) -> Complex<T> {
    let r = z.norm();
    if r == T::zero() {
        Complex::new(T::one(), T::zero())
    } else {
        z / r
    }
}
