//! Exhaustive oracles for tiny instances and the approximation-ratio harness.
//!
//! Everything here talks to the raw objective and independence system, never
//! through the counted wrappers, so it stays independent of the algorithms
//! under test.

mod brute;
mod checks;
mod harness;
pub mod suites;

pub use brute::{brute_force_opt, BruteForceResult, BRUTE_FORCE_CAP};
pub use checks::{
    check_extendible, check_k_system, check_monotone, check_submodular, CLASS_CHECK_CAP,
};
pub use harness::{ratio_harness, write_csv, Contender, HarnessRow, CSV_HEADER};
