//! Simultaneous greedy algorithms: ℓ disjoint solutions grown in parallel.
//!
//! [`simultaneous_greedys`] is the exact variant driven by a lazy queue of
//! element/solution pairs. [`fast_sgs`] and [`knapsack_sgs`] replace the
//! exact search with a decreasing threshold, the latter adding a density gate
//! and knapsack budgets. [`density_search_sgs`] bisects over density
//! thresholds using the knapsack rejection indicator.

mod density;
mod exact;
mod params;
mod threshold;

pub use density::{
    density_bisection, density_search_range, density_search_sgs, inner_call_bound, Probe,
};
pub use exact::{simultaneous_greedys, simultaneous_greedys_eager};
pub use params::{choose_beta, choose_ell, exchange_bound, SgsParams};
pub use threshold::{fast_sgs, knapsack_sgs, threshold_rounds};

pub(crate) use density::{check_search, search};
pub(crate) use exact::lazy_pairs;
pub(crate) use params::check_eps;
pub(crate) use threshold::{check_rho, sweep, Singletons};
