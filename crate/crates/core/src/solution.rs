//! A live partial solution with its cached value and oracle bookkeeping.

use crate::constraints::KnapsackSet;
use crate::error::Result;
use crate::oracle::{CountedIndependence, CountedObjective};
use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// Members plus everything needed to answer `f(S + u)`, `S + u ∈ I` and the
/// knapsack test without touching `S` from scratch.
#[derive(Debug, Clone)]
pub struct Solution<T> {
    members: Vec<ElementId>,
    value: T,
    cache: Vec<T>,
    tally: Vec<u32>,
    load: Vec<T>,
}

impl<T: Scalar> Solution<T> {
    /// Empty solution with known `f(∅)`.
    pub fn empty(
        f_empty: T,
        f: &CountedObjective<'_, T>,
        sys: &CountedIndependence<'_>,
        knapsacks: &KnapsackSet<T>,
    ) -> Self {
        Self {
            members: Vec::new(),
            value: f_empty,
            cache: f.inner().init_cache(),
            tally: vec![0; sys.tally_len()],
            load: vec![T::zero(); knapsacks.m()],
        }
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn value(&self) -> T {
        self.value
    }

    pub fn load(&self) -> &[T] {
        &self.load
    }

    pub fn to_set(&self) -> ElementSet {
        ElementSet::from_ids(self.members.iter().copied())
    }

    /// `f(S + u)`; one value query.
    pub fn value_with(&self, f: &CountedObjective<'_, T>, u: ElementId) -> Result<T> {
        f.value_with(&self.members, self.value, &self.cache, u)
    }

    /// `f(u | S)`; one value query.
    pub fn gain(&self, f: &CountedObjective<'_, T>, u: ElementId) -> Result<T> {
        Ok(self.value_with(f, u)? - self.value)
    }

    /// `S + u ∈ I`; one independence query.
    pub fn fits(&self, sys: &CountedIndependence<'_>, u: ElementId) -> bool {
        sys.can_add(&self.members, &self.tally, u)
    }

    pub fn fits_knapsacks(&self, knapsacks: &KnapsackSet<T>, u: ElementId) -> bool {
        knapsacks.can_add(&self.load, u)
    }

    /// Adds `u`, whose `f(S + u)` is `new_value`.
    pub fn push(
        &mut self,
        f: &CountedObjective<'_, T>,
        sys: &CountedIndependence<'_>,
        knapsacks: &KnapsackSet<T>,
        u: ElementId,
        new_value: T,
    ) {
        f.inner().absorb(&mut self.cache, u);
        sys.record(&mut self.tally, u);
        knapsacks.add_to(&mut self.load, u);
        let pos = self.members.partition_point(|&e| e < u);
        self.members.insert(pos, u);
        self.value = new_value;
    }
}
