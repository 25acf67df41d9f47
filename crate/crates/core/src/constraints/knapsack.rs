use crate::constraints::{Declared, IndependenceSystem};
use crate::error::{invalid, Result};
use crate::scalar::Scalar;
use crate::set::ElementId;

/// Inclusive slack on the unit budget, absorbing rounding from normalization.
pub const KNAPSACK_TOLERANCE: f64 = 1e-12;

/// `m` modular cost functions, each normalized to a unit budget.
#[derive(Debug, Clone)]
pub struct KnapsackSet<T> {
    n: usize,
    costs: Vec<Vec<T>>,
}

impl<T: Scalar> KnapsackSet<T> {
    /// No knapsack constraints.
    pub fn none(n: usize) -> Self {
        Self {
            n,
            costs: Vec::new(),
        }
    }

    /// Builds knapsacks from raw costs and budgets; each cost vector is divided
    /// by its budget.
    pub fn new(n: usize, costs: Vec<Vec<T>>, budgets: &[T]) -> Result<Self> {
        if costs.len() != budgets.len() {
            return Err(invalid(
                "budgets",
                format!("{} cost vectors but {} budgets", costs.len(), budgets.len()),
            ));
        }
        let mut normalized = Vec::with_capacity(costs.len());
        for (r, (c, &b)) in costs.into_iter().zip(budgets).enumerate() {
            if c.len() != n {
                return Err(invalid(
                    "costs",
                    format!("knapsack {r} has {} entries, expected {n}", c.len()),
                ));
            }
            if !(b > T::zero()) {
                return Err(invalid(
                    "budgets",
                    format!("knapsack {r} budget {b} not positive"),
                ));
            }
            if let Some(bad) = c.iter().find(|x| !(**x >= T::zero())) {
                return Err(invalid(
                    "costs",
                    format!("knapsack {r} has negative cost {bad}"),
                ));
            }
            normalized.push(c.into_iter().map(|x| x / b).collect());
        }
        Ok(Self {
            n,
            costs: normalized,
        })
    }

    /// Knapsacks whose costs are already relative to a unit budget.
    pub fn unit(n: usize, costs: Vec<Vec<T>>) -> Result<Self> {
        let ones = vec![T::one(); costs.len()];
        Self::new(n, costs, &ones)
    }

    pub fn m(&self) -> usize {
        self.costs.len()
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn cost(&self, r: usize, u: ElementId) -> T {
        self.costs[r][u]
    }

    /// `sum_r c_r(u)`, the denominator of an element's density.
    pub fn total_cost(&self, u: ElementId) -> T {
        self.costs.iter().map(|c| c[u]).sum()
    }

    /// Per-knapsack totals `c_r(S)`.
    pub fn load(&self, set: &[ElementId]) -> Vec<T> {
        self.costs
            .iter()
            .map(|c| set.iter().map(|&u| c[u]).sum())
            .collect()
    }

    pub fn fits(&self, set: &[ElementId]) -> bool {
        let tol = T::lit(KNAPSACK_TOLERANCE);
        self.load(set).iter().all(|&t| t <= T::one() + tol)
    }

    /// Whether adding `u` to a solution with per-knapsack totals `load` keeps
    /// every total within `1 + KNAPSACK_TOLERANCE`.
    pub fn can_add(&self, load: &[T], u: ElementId) -> bool {
        let tol = T::lit(KNAPSACK_TOLERANCE);
        self.costs
            .iter()
            .zip(load)
            .all(|(c, &t)| t + c[u] <= T::one() + tol)
    }

    pub fn add_to(&self, load: &mut [T], u: ElementId) {
        for (t, c) in load.iter_mut().zip(&self.costs) {
            *t = *t + c[u];
        }
    }
}

/// Free-function form of [`KnapsackSet::can_add`].
pub fn knapsack_can_add<T: Scalar>(knapsacks: &KnapsackSet<T>, load: &[T], u: ElementId) -> bool {
    knapsacks.can_add(load, u)
}

/// Knapsacks viewed as a plain independence system, for algorithms that fold
/// budgets into feasibility instead of gating on density.
#[derive(Debug, Clone)]
pub struct KnapsackSystem<T> {
    knapsacks: KnapsackSet<T>,
}

impl<T: Scalar> KnapsackSystem<T> {
    pub fn new(knapsacks: KnapsackSet<T>) -> Self {
        Self { knapsacks }
    }
}

impl<T: Scalar> IndependenceSystem for KnapsackSystem<T> {
    fn ground_size(&self) -> usize {
        self.knapsacks.ground_size()
    }

    // Knapsack families are only k-extendible for k up to n times the cost spread.
    fn declared(&self) -> Declared {
        Declared::system(self.knapsacks.ground_size().max(1))
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        self.knapsacks.fits(set)
    }

    fn can_add(&self, set: &[ElementId], _tally: &[u32], u: ElementId) -> bool {
        let load = self.knapsacks.load(set);
        self.knapsacks.can_add(&load, u)
    }
}
