//! Scalar abstraction shared by objectives, knapsacks and the algorithms.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Real number type used for objective values, costs and thresholds.
///
/// Implemented for `f32` and `f64`. Everything numeric in the crate is generic
/// over this trait; the concrete aliases at the crate root fix it to `f64`.
pub trait Scalar:
    Float + FromPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Converts an `f64` literal or parameter into this scalar type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 is representable in every Scalar")
    }

    /// Converts a count into this scalar type.
    fn count(n: usize) -> Self {
        Self::from_usize(n).expect("usize is representable in every Scalar")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Slack used when guarding against negative objective values produced by
    /// floating-point cancellation.
    fn negativity_slack() -> Self {
        Self::epsilon().sqrt()
    }

    /// Relative width of the band in which two marginal gains count as tied.
    /// Gains are differences of objective values, so rounding noise scales
    /// with the values rather than the gain.
    fn tie_slack() -> Self {
        Self::epsilon() * Self::lit(1024.0)
    }
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
}
