use crate::error::{invalid, Result};
use crate::objectives::Objective;
use crate::scalar::Scalar;
use crate::set::ElementId;

/// `f(S) = b + sum of c_u over u in S`.
///
/// Weights may be negative; non-negativity of observed values is checked by
/// the counting wrapper, not here.
#[derive(Debug, Clone)]
pub struct Modular<T> {
    weights: Vec<T>,
    bias: T,
}

impl<T: Scalar> Modular<T> {
    pub fn new(weights: Vec<T>, bias: T) -> Result<Self> {
        if bias < T::zero() {
            return Err(invalid("bias", format!("must be non-negative, got {bias}")));
        }
        Ok(Self { weights, bias })
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }
}

impl<T: Scalar> Objective<T> for Modular<T> {
    fn ground_size(&self) -> usize {
        self.weights.len()
    }

    fn evaluate(&self, set: &[ElementId]) -> T {
        self.bias + set.iter().map(|&u| self.weights[u]).sum::<T>()
    }

    fn value_with(&self, _set: &[ElementId], value: T, _cache: &[T], u: ElementId) -> T {
        value + self.weights[u]
    }
}
