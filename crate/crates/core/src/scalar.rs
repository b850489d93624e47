use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar used throughout the crate.
///
/// Everything is generic over this trait so the same code runs in `f32` and
/// `f64`; the concrete aliases at the crate root fix `f64` for ordinary use.
/// Values are assumed non-NaN: constructors of the set types reject NaN and
/// the engines never produce one from non-NaN input.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an `f64` constant into the working scalar type.
pub fn num<F: Scalar>(v: f64) -> F {
    F::from_f64(v).expect("constant must be representable in the scalar type")
}
