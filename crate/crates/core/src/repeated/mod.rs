//! Greedy, repeated greedy and their threshold, knapsack and sampling variants.
//!
//! [`repeated_greedy`] runs greedy ℓ times on a shrinking ground set and
//! filters each result through [`usm_double_greedy`]. The modified variants
//! swap the inner greedy for a density-gated threshold greedy so knapsack
//! constraints can be handled, and [`density_search_rg`] bisects over the
//! density threshold.

mod greedy;
mod params;
mod rg;
mod usm;

pub use greedy::{greedy, sample_greedy, sample_greedy_with_probability};
pub use params::{density_rg_beta, density_rg_ell, repeated_greedy_ell, RgParams, DEFAULT_ALPHA};
pub use rg::{density_search_rg, modified_greedy, modified_repeated_greedy, repeated_greedy};
pub use usm::usm_double_greedy;
