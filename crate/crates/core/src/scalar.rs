//! Scalar abstraction: every float-valued computation in this crate is generic
//! over [`Real`], so the same code runs on `f32` and `f64`. Concrete aliases
//! live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Send + Sync + Debug + Display + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + NumAssign + Sum + Send + Sync + Debug + Display + 'static
{
}

/// Embeds an `f64` constant (tolerances, closed-form values) into the working
/// scalar type.
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable in scalar type")
}

pub(crate) fn half<T: Real>() -> T {
    T::one() / real(2.0)
}

pub(crate) fn two<T: Real>() -> T {
    real(2.0)
}
