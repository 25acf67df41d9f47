//! Run reports returned by every algorithm.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// A set considered by the final argmax of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate<T> {
    pub label: String,
    pub set: ElementSet,
    pub value: T,
}

/// One accepted element: `u` joined solution `solution` with marginal gain
/// `gain`, under threshold `threshold` for the thresholded algorithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accepted<T> {
    pub element: ElementId,
    pub solution: usize,
    pub gain: T,
    pub threshold: Option<T>,
}

#[derive(Debug, Clone)]
pub struct RunReport<T> {
    pub algorithm: String,
    pub params: BTreeMap<String, String>,
    pub solution: ElementSet,
    pub value: T,
    /// Value queries made during this run.
    pub value_calls: u64,
    /// Independence queries made during this run.
    pub independence_calls: u64,
    /// Knapsack rejection indicator; `None` for algorithms without knapsacks.
    pub knapsack_rejected: Option<bool>,
    pub candidates: Vec<Candidate<T>>,
    /// Acceptances in order, across all solutions.
    pub trace: Vec<Accepted<T>>,
    /// Threshold rounds for thresholded algorithms, greedy rounds otherwise.
    pub rounds: usize,
    /// Inner algorithm invocations, for the search and repeated wrappers.
    pub subcalls: usize,
}

impl<T: Scalar> RunReport<T> {
    pub(crate) fn new(algorithm: &str) -> Self {
        Self {
            algorithm: algorithm.to_string(),
            params: BTreeMap::new(),
            solution: ElementSet::new(),
            value: T::zero(),
            value_calls: 0,
            independence_calls: 0,
            knapsack_rejected: None,
            candidates: Vec::new(),
            trace: Vec::new(),
            rounds: 0,
            subcalls: 0,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub(crate) fn candidate(&mut self, label: impl Into<String>, set: ElementSet, value: T) {
        self.candidates.push(Candidate {
            label: label.into(),
            set,
            value,
        });
    }

    /// Picks the best candidate; earlier candidates win ties.
    pub(crate) fn select_best(&mut self) {
        let mut best: Option<&Candidate<T>> = None;
        for c in &self.candidates {
            if best.is_none_or(|b| c.value > b.value) {
                best = Some(c);
            }
        }
        if let Some(b) = best {
            self.solution = b.set.clone();
            self.value = b.value;
        }
    }

    /// `key=value` pairs joined with `;`, in key order.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}
