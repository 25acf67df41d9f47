//! Call-counting wrappers around value and independence oracles.

use std::cell::Cell;

use crate::constraints::{Declared, IndependenceSystem};
use crate::error::{Error, Result};
use crate::objectives::Objective;
use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// Value oracle with an invocation counter and a non-negativity guard.
///
/// Every call to the inner objective, from scratch or incremental, counts as
/// exactly one query.
pub struct CountedObjective<'a, T> {
    inner: &'a dyn Objective<T>,
    calls: Cell<u64>,
}

impl<'a, T: Scalar> CountedObjective<'a, T> {
    pub fn new(inner: &'a dyn Objective<T>) -> Self {
        Self {
            inner,
            calls: Cell::new(0),
        }
    }

    pub fn inner(&self) -> &'a dyn Objective<T> {
        self.inner
    }

    pub fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    pub fn calls(&self) -> u64 {
        self.calls.get()
    }

    fn check_id(&self, u: ElementId) -> Result<()> {
        let n = self.ground_size();
        if u >= n {
            return Err(Error::ElementOutOfRange { id: u, n });
        }
        Ok(())
    }

    fn guard(&self, value: T, set: impl FnOnce() -> Vec<ElementId>) -> Result<T> {
        if !value.is_finite() {
            return Err(Error::NonFiniteValue { set: set() });
        }
        if value < T::zero() {
            // Cancellation in incremental sums can dip a hair below zero.
            if value >= -T::negativity_slack() {
                return Ok(T::zero());
            }
            return Err(Error::NegativeValue {
                set: set(),
                value: value.as_f64(),
            });
        }
        Ok(value)
    }

    /// `f(S)`; one query.
    pub fn value(&self, set: &[ElementId]) -> Result<T> {
        if let Some(&u) = set.last() {
            self.check_id(u)?;
        }
        self.calls.set(self.calls.get() + 1);
        let v = self.inner.evaluate(set);
        self.guard(v, || set.to_vec())
    }

    /// `f(S + u)` through the objective's incremental path; one query.
    pub fn value_with(&self, set: &[ElementId], value: T, cache: &[T], u: ElementId) -> Result<T> {
        self.check_id(u)?;
        self.calls.set(self.calls.get() + 1);
        let v = self.inner.value_with(set, value, cache, u);
        self.guard(v, || {
            let mut s = set.to_vec();
            s.push(u);
            s.sort_unstable();
            s
        })
    }

    /// `f(u | S) = f(S + u) - f(S)`; two queries.
    pub fn marginal_gain(&self, u: ElementId, set: &ElementSet) -> Result<T> {
        self.check_id(u)?;
        let base = self.value(set.as_slice())?;
        self.marginal_gain_cached(u, set, base)
    }

    /// `f(u | S)` given a known `f(S)`; one query.
    pub fn marginal_gain_cached(&self, u: ElementId, set: &ElementSet, f_set: T) -> Result<T> {
        self.check_id(u)?;
        let with = self.value(set.with(u).as_slice())?;
        Ok(with - f_set)
    }

    /// `f({u})` for every `u` in `ground`, in ascending order; one query each.
    pub fn singletons(&self, ground: &ElementSet) -> Result<Vec<(ElementId, T)>> {
        ground.iter().map(|u| Ok((u, self.value(&[u])?))).collect()
    }

    /// `(Δ_f, argmax)` over `ground` with ties to the lowest id; `|ground|` queries.
    pub fn max_singleton(&self, ground: &ElementSet) -> Result<(T, ElementId)> {
        if ground.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let all = self.singletons(ground)?;
        Ok(argmax_singleton(&all).expect("non-empty"))
    }
}

/// Best `(value, id)` among precomputed singleton values, ties to the lowest id.
pub(crate) fn argmax_singleton<T: Scalar>(values: &[(ElementId, T)]) -> Option<(T, ElementId)> {
    let mut best: Option<(T, ElementId)> = None;
    for &(u, v) in values {
        if best.is_none_or(|(b, _)| v > b) {
            best = Some((v, u));
        }
    }
    best
}

/// Independence oracle with an invocation counter.
///
/// `record` only updates caller-owned bookkeeping and is not counted.
pub struct CountedIndependence<'a> {
    inner: &'a dyn IndependenceSystem,
    calls: Cell<u64>,
}

impl<'a> CountedIndependence<'a> {
    pub fn new(inner: &'a dyn IndependenceSystem) -> Self {
        Self {
            inner,
            calls: Cell::new(0),
        }
    }

    pub fn inner(&self) -> &'a dyn IndependenceSystem {
        self.inner
    }

    pub fn calls(&self) -> u64 {
        self.calls.get()
    }

    pub fn declared(&self) -> Declared {
        self.inner.declared()
    }

    pub fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    pub fn tally_len(&self) -> usize {
        self.inner.tally_len()
    }

    pub fn is_independent(&self, set: &[ElementId]) -> bool {
        self.calls.set(self.calls.get() + 1);
        self.inner.is_independent(set)
    }

    pub fn can_add(&self, set: &[ElementId], tally: &[u32], u: ElementId) -> bool {
        self.calls.set(self.calls.get() + 1);
        self.inner.can_add(set, tally, u)
    }

    pub fn record(&self, tally: &mut [u32], u: ElementId) {
        self.inner.record(tally, u)
    }
}

/// Current `(value_calls, independence_calls)`.
pub fn snapshot_counts<T: Scalar>(
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
) -> (u64, u64) {
    (f.calls(), sys.calls())
}
