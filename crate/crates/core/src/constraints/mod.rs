//! Independence systems and knapsack constraints.
//!
//! Algorithms only ever ask whether `S + u` stays independent for an already
//! independent `S`, so [`IndependenceSystem::can_add`] is the hot path. A
//! system may keep a per-solution tally of `u32` counters to answer it in
//! time independent of `|S|`; full [`IndependenceSystem::is_independent`]
//! checks are for validation and brute force.

mod cardinality;
mod hardness;
mod intersection;
mod interval;
mod knapsack;
mod partition;

pub use cardinality::{build_cardinality, Cardinality};
pub use hardness::{build_hardness_m, g_eval, HardnessSystemM};
pub use intersection::{build_intersection, Intersection};
pub use interval::{build_interval_separation, IntervalSeparation};
pub use knapsack::{knapsack_can_add, KnapsackSet, KnapsackSystem, KNAPSACK_TOLERANCE};
pub use partition::{build_partition_limit, PartitionLimit};

use std::fmt;

use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// Structural class an independence system is declared to belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemClass {
    /// Bases of any subset differ in size by at most a factor `k`.
    KSystem,
    /// Adding an element to an independent set needs at most `k` removals.
    KExtendible,
}

/// A class together with its parameter `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Declared {
    pub class: SystemClass,
    pub k: usize,
}

impl Declared {
    pub fn extendible(k: usize) -> Self {
        Self {
            class: SystemClass::KExtendible,
            k,
        }
    }

    pub fn system(k: usize) -> Self {
        Self {
            class: SystemClass::KSystem,
            k,
        }
    }

    /// Every k-extendible system is a k-system; this forgets the stronger class.
    pub fn as_system(self) -> Self {
        Self::system(self.k)
    }
}

impl fmt::Display for Declared {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            SystemClass::KSystem => write!(f, "{}-system", self.k),
            SystemClass::KExtendible => write!(f, "{}-extendible", self.k),
        }
    }
}

/// A down-closed family of feasible sets over `0..ground_size()`.
///
/// Slices are sorted ascending. `tally` slices have length
/// [`IndependenceSystem::tally_len`] and are maintained by the caller through
/// [`IndependenceSystem::record`].
pub trait IndependenceSystem {
    fn ground_size(&self) -> usize;

    fn declared(&self) -> Declared;

    fn is_independent(&self, set: &[ElementId]) -> bool;

    fn tally_len(&self) -> usize {
        0
    }

    /// Updates the tally after `u` joins the solution.
    fn record(&self, _tally: &mut [u32], _u: ElementId) {}

    /// Whether `S + u` is independent, for independent `S` not containing `u`.
    fn can_add(&self, set: &[ElementId], _tally: &[u32], u: ElementId) -> bool {
        let pos = set.partition_point(|&e| e < u);
        let mut next = Vec::with_capacity(set.len() + 1);
        next.extend_from_slice(&set[..pos]);
        next.push(u);
        next.extend_from_slice(&set[pos..]);
        self.is_independent(&next)
    }
}

impl<I: IndependenceSystem + ?Sized> IndependenceSystem for Box<I> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn declared(&self) -> Declared {
        (**self).declared()
    }
    fn is_independent(&self, set: &[ElementId]) -> bool {
        (**self).is_independent(set)
    }
    fn tally_len(&self) -> usize {
        (**self).tally_len()
    }
    fn record(&self, tally: &mut [u32], u: ElementId) {
        (**self).record(tally, u)
    }
    fn can_add(&self, set: &[ElementId], tally: &[u32], u: ElementId) -> bool {
        (**self).can_add(set, tally, u)
    }
}

/// Overrides the declared class of a system, e.g. to run k-system parameter
/// rules on a k-extendible instance.
pub struct Redeclared<I> {
    inner: I,
    declared: Declared,
}

impl<I> Redeclared<I> {
    pub fn new(inner: I, declared: Declared) -> Self {
        Self { inner, declared }
    }
}

impl<I: IndependenceSystem> IndependenceSystem for Redeclared<I> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }
    fn declared(&self) -> Declared {
        self.declared
    }
    fn is_independent(&self, set: &[ElementId]) -> bool {
        self.inner.is_independent(set)
    }
    fn tally_len(&self) -> usize {
        self.inner.tally_len()
    }
    fn record(&self, tally: &mut [u32], u: ElementId) {
        self.inner.record(tally, u)
    }
    fn can_add(&self, set: &[ElementId], tally: &[u32], u: ElementId) -> bool {
        self.inner.can_add(set, tally, u)
    }
}

/// Splits `ground` into elements whose singleton is feasible for both the
/// independence system and every knapsack, and the rest. Dropped elements
/// are logged.
pub fn admissible_ground<T: Scalar>(
    ground: &ElementSet,
    system: &dyn IndependenceSystem,
    knapsacks: &KnapsackSet<T>,
) -> (ElementSet, Vec<ElementId>) {
    let mut kept = Vec::with_capacity(ground.len());
    let mut dropped = Vec::new();
    let empty_tally = vec![0; system.tally_len()];
    let zero_load = vec![T::zero(); knapsacks.m()];
    for u in ground {
        if system.can_add(&[], &empty_tally, u) && knapsacks.can_add(&zero_load, u) {
            kept.push(u);
        } else {
            dropped.push(u);
        }
    }
    if !dropped.is_empty() {
        log::warn!(
            "dropping {} element(s) whose singleton is infeasible: {:?}",
            dropped.len(),
            dropped
        );
    }
    (ElementSet::from_ids(kept), dropped)
}
