use crate::constraints::{IndependenceSystem, KnapsackSet};
use crate::error::{Error, Result};
use crate::objectives::Objective;
use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};

/// Largest ground set [`brute_force_opt`] will enumerate.
pub const BRUTE_FORCE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult<T> {
    pub opt_set: ElementSet,
    pub opt_value: T,
    /// Number of feasible subsets, including the empty set.
    pub feasible_count: u64,
}

/// Exact optimum over every subset of `ground` that is independent and within
/// every knapsack. Ties go to the lexicographically smallest set.
///
/// Enumeration is depth-first in lexicographic order and prunes at the first
/// infeasible prefix, which is sound because every constraint is down-closed.
pub fn brute_force_opt<T: Scalar>(
    ground: &ElementSet,
    f: &dyn Objective<T>,
    sys: &dyn IndependenceSystem,
    knapsacks: &KnapsackSet<T>,
) -> Result<BruteForceResult<T>> {
    if ground.len() > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            n: ground.len(),
            cap: BRUTE_FORCE_CAP,
        });
    }
    let elems = ground.as_slice();
    let mut best = BruteForceResult {
        opt_set: ElementSet::new(),
        opt_value: f.evaluate(&[]),
        feasible_count: 1,
    };
    let mut stack: Vec<ElementId> = Vec::with_capacity(elems.len());
    descend(elems, 0, &mut stack, f, sys, knapsacks, &mut best);
    Ok(best)
}

fn descend<T: Scalar>(
    elems: &[ElementId],
    from: usize,
    current: &mut Vec<ElementId>,
    f: &dyn Objective<T>,
    sys: &dyn IndependenceSystem,
    knapsacks: &KnapsackSet<T>,
    best: &mut BruteForceResult<T>,
) {
    for i in from..elems.len() {
        current.push(elems[i]);
        if sys.is_independent(current) && knapsacks.fits(current) {
            best.feasible_count += 1;
            let v = f.evaluate(current);
            if v > best.opt_value {
                best.opt_value = v;
                best.opt_set = ElementSet::from_ids(current.iter().copied());
            }
            descend(elems, i + 1, current, f, sys, knapsacks, best);
        }
        current.pop();
    }
}
