//! Greedy maximization of non-negative submodular functions subject to a
//! k-system (or k-extendible system) and optional knapsack constraints.
//!
//! The algorithms come in two families. [`sgs`] grows several disjoint
//! solutions at once; [`repeated`] runs greedy repeatedly on a shrinking
//! ground set and cleans each result with an unconstrained maximizer. Both
//! have thresholded variants that reject low-density elements and a density
//! search that picks the threshold.
//!
//! Everything is generic over [`Scalar`]; the aliases at the crate root fix
//! it to `f64`.
//!
//! ```
//! use simgreedy::constraints::build_cardinality;
//! use simgreedy::objectives::Modular;
//! use simgreedy::oracle::{CountedIndependence, CountedObjective};
//! use simgreedy::sgs::simultaneous_greedys;
//! use simgreedy::ElementSet;
//!
//! let f = Modular::new(vec![3.0, 1.0, 4.0, 1.0], 0.0).unwrap();
//! let sys = build_cardinality(4, 2);
//! let (fc, sc) = (CountedObjective::new(&f), CountedIndependence::new(&sys));
//! let report = simultaneous_greedys(&ElementSet::from_ids(0..4), &fc, &sc, 1).unwrap();
//! assert_eq!(report.solution.as_slice(), &[0, 2]);
//! assert_eq!(report.value, 7.0);
//! ```

// `!(x >= 0)` style checks are deliberate: they reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constraints;
pub mod error;
pub mod objectives;
pub mod oracle;
pub mod repeated;
pub mod report;
pub mod scalar;
pub mod set;
pub mod sgs;
pub mod solution;
pub mod verify;

pub use constraints::{Declared, IndependenceSystem, SystemClass};
pub use error::{Error, Result};
pub use objectives::Objective;
pub use report::{Candidate, RunReport};
pub use scalar::Scalar;
pub use set::{ElementId, ElementSet, GroundSet};

pub type Report = RunReport<f64>;
pub type KnapsackSet = constraints::KnapsackSet<f64>;
pub type Instance = objectives::Instance<f64>;
pub type CountedObjective<'a> = oracle::CountedObjective<'a, f64>;
pub type Modular = objectives::Modular<f64>;
pub type Coverage = objectives::Coverage<f64>;
pub type GraphCut = objectives::GraphCut<f64>;
pub type DiverseSummarization = objectives::DiverseSummarization<f64>;
