//! Non-negative submodular objectives and random test instances.
//!
//! Every objective supports from-scratch evaluation plus an optional
//! incremental path: a running solution keeps a small auxiliary cache so that
//! `f(S + u)` costs far less than re-evaluating `f` on `S + u`.

mod coverage;
mod cut;
mod diverse;
mod modular;
pub mod random;

pub use coverage::Coverage;
pub use cut::GraphCut;
pub use diverse::{cosine_kernel, DiverseSummarization, SimilarityMatrix};
pub use modular::Modular;
pub use random::{random_instance, ConstraintKind, Instance, InstanceKind, ObjectiveKind};

use crate::scalar::Scalar;
use crate::set::ElementId;

/// A set function `f: 2^N -> R` over the ground set `0..ground_size()`.
///
/// Slices passed to these methods are sorted ascending without duplicates.
pub trait Objective<T: Scalar> {
    fn ground_size(&self) -> usize;

    /// `f(S)` evaluated from scratch.
    fn evaluate(&self, set: &[ElementId]) -> T;

    /// Fresh auxiliary cache for the empty solution.
    fn init_cache(&self) -> Vec<T> {
        Vec::new()
    }

    /// `f(S + u)` for `u` not in `S`, given `value = f(S)` and the cache
    /// maintained by [`Objective::absorb`].
    fn value_with(&self, set: &[ElementId], _value: T, _cache: &[T], u: ElementId) -> T {
        let pos = set.partition_point(|&e| e < u);
        let mut next = Vec::with_capacity(set.len() + 1);
        next.extend_from_slice(&set[..pos]);
        next.push(u);
        next.extend_from_slice(&set[pos..]);
        self.evaluate(&next)
    }

    /// Updates the cache after `u` joins the solution.
    fn absorb(&self, _cache: &mut Vec<T>, _u: ElementId) {}
}

impl<T: Scalar, O: Objective<T> + ?Sized> Objective<T> for Box<O> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn evaluate(&self, set: &[ElementId]) -> T {
        (**self).evaluate(set)
    }
    fn init_cache(&self) -> Vec<T> {
        (**self).init_cache()
    }
    fn value_with(&self, set: &[ElementId], value: T, cache: &[T], u: ElementId) -> T {
        (**self).value_with(set, value, cache, u)
    }
    fn absorb(&self, cache: &mut Vec<T>, u: ElementId) {
        (**self).absorb(cache, u)
    }
}

/// Wraps a closure as an objective with no incremental path.
pub struct FnObjective<F> {
    n: usize,
    f: F,
}

impl<F> FnObjective<F> {
    pub fn new(n: usize, f: F) -> Self {
        Self { n, f }
    }
}

impl<T: Scalar, F: Fn(&[ElementId]) -> T> Objective<T> for FnObjective<F> {
    fn ground_size(&self) -> usize {
        self.n
    }
    fn evaluate(&self, set: &[ElementId]) -> T {
        (self.f)(set)
    }
}
