use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::constraints::KnapsackSet;
use crate::error::{invalid, Result};
use crate::oracle::{CountedIndependence, CountedObjective};
use crate::report::{Accepted, RunReport};
use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};
use crate::solution::Solution;

/// Queue entry: `with = f(S_j + u)` computed when `S_j` had `version` members,
/// and `gain = with - f(S_j)` at that time. By submodularity `gain` only
/// overestimates the current gain.
#[derive(Debug, Clone, Copy)]
struct Pair<T> {
    gain: T,
    with: T,
    u: ElementId,
    j: usize,
    version: usize,
}

// Max-heap order: higher gain, then lower element id, then lower solution index.
impl<T: Scalar> Ord for Pair<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gain
            .partial_cmp(&other.gain)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.u.cmp(&self.u))
            .then_with(|| other.j.cmp(&self.j))
    }
}

impl<T: Scalar> PartialOrd for Pair<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> PartialEq for Pair<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for Pair<T> {}

/// Lower edge of the tie band below the best gain `gain`, whose pair has
/// `f(S + u) = with`.
fn band_floor<T: Scalar>(gain: T, with: T) -> T {
    gain - T::tie_slack() * with.abs().max(gain)
}

/// Accepted pairs of an exact greedy run and the final solutions.
pub(crate) struct Exact<T> {
    pub solutions: Vec<Solution<T>>,
    pub trace: Vec<Accepted<T>>,
}

fn start_solutions<T: Scalar>(
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    ell: usize,
) -> Result<(Vec<Solution<T>>, KnapsackSet<T>)> {
    let none = KnapsackSet::none(f.ground_size());
    let f_empty = f.value(&[])?;
    let solutions = (0..ell)
        .map(|_| Solution::empty(f_empty, f, sys, &none))
        .collect();
    Ok((solutions, none))
}

/// Lazy exact greedy over ℓ solutions.
///
/// Each step picks, among feasible pairs whose gain lies within the tie band
/// of the best feasible gain, the one with the lowest element id and then the
/// lowest solution index. Stale entries that could reach the band are
/// refreshed before the choice is made.
pub(crate) fn lazy_pairs<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    ell: usize,
) -> Result<Exact<T>> {
    let (mut solutions, none) = start_solutions(f, sys, ell)?;
    let f_empty = solutions[0].value();
    let mut used = vec![false; f.ground_size()];
    let mut trace = Vec::new();

    let mut queue = BinaryHeap::with_capacity(ground.len() * ell);
    for u in ground {
        // Every solution starts empty, so one query serves all ℓ pairs.
        let with = solutions[0].value_with(f, u)?;
        let gain = with - f_empty;
        if gain > T::zero() {
            for j in 0..ell {
                queue.push(Pair {
                    gain,
                    with,
                    u,
                    j,
                    version: 0,
                });
            }
        }
    }

    let mut band: Vec<Pair<T>> = Vec::new();
    loop {
        let mut floor: Option<T> = None;
        while let Some(top) = queue.peek() {
            if floor.is_some_and(|fl| top.gain < fl) {
                break;
            }
            let top = queue.pop().expect("peeked");
            if used[top.u] {
                continue;
            }
            let sol = &solutions[top.j];
            if top.version != sol.len() {
                let with = sol.value_with(f, top.u)?;
                let gain = with - sol.value();
                if gain > T::zero() {
                    queue.push(Pair {
                        gain,
                        with,
                        version: sol.len(),
                        ..top
                    });
                }
                continue;
            }
            // Down-closure makes a rejection permanent for this solution.
            if !sol.fits(sys, top.u) {
                continue;
            }
            let fl = band_floor(top.gain, top.with);
            if floor.is_none_or(|old| fl > old) {
                floor = Some(fl);
            }
            band.push(top);
        }
        let Some(floor) = floor else { break };

        let pick = band
            .iter()
            .enumerate()
            .filter(|(_, p)| p.gain >= floor)
            .min_by_key(|(_, p)| (p.u, p.j))
            .map(|(i, _)| i)
            .expect("the best pair is in its own band");
        let win = band.swap_remove(pick);
        queue.extend(band.drain(..));

        solutions[win.j].push(f, sys, &none, win.u, win.with);
        used[win.u] = true;
        trace.push(Accepted {
            element: win.u,
            solution: win.j,
            gain: win.gain,
            threshold: None,
        });
    }
    Ok(Exact { solutions, trace })
}

/// Eager counterpart of [`lazy_pairs`]: rescans every pair at every step.
pub(crate) fn eager_pairs<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    ell: usize,
) -> Result<Exact<T>> {
    let (mut solutions, none) = start_solutions(f, sys, ell)?;
    let mut used = vec![false; f.ground_size()];
    let mut trace = Vec::new();

    loop {
        // Feasible positive pairs in ascending (u, j).
        let mut pairs: Vec<(T, T, ElementId, usize)> = Vec::new();
        for u in ground {
            if used[u] {
                continue;
            }
            for (j, sol) in solutions.iter().enumerate() {
                let with = sol.value_with(f, u)?;
                let gain = with - sol.value();
                if gain > T::zero() && sol.fits(sys, u) {
                    pairs.push((gain, with, u, j));
                }
            }
        }
        let Some(floor) = pairs
            .iter()
            .map(|&(gain, with, ..)| band_floor(gain, with))
            .reduce(T::max)
        else {
            break;
        };
        let &(gain, with, u, j) = pairs.iter().find(|p| p.0 >= floor).expect("non-empty band");
        solutions[j].push(f, sys, &none, u, with);
        used[u] = true;
        trace.push(Accepted {
            element: u,
            solution: j,
            gain,
            threshold: None,
        });
    }
    Ok(Exact { solutions, trace })
}

fn check_ell(ell: usize) -> Result<()> {
    if ell == 0 {
        return Err(invalid("ell", "must be at least 1"));
    }
    Ok(())
}

fn finish<T: Scalar>(
    mut report: RunReport<T>,
    run: Exact<T>,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    start: (u64, u64),
) -> RunReport<T> {
    for (j, s) in run.solutions.iter().enumerate() {
        report.candidate(format!("S{}", j + 1), s.to_set(), s.value());
    }
    report.select_best();
    report.rounds = run.trace.len();
    report.trace = run.trace;
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    report
}

/// Exact simultaneous greedy with `ell` solutions.
///
/// Repeatedly adds the feasible element/solution pair of largest strictly
/// positive marginal gain until none remains, then returns the best solution.
/// Gains within rounding noise of the best count as tied; ties go to the
/// lowest element id, then the lowest solution index. Stale gains are kept
/// in a priority queue and re-evaluated only when they reach the top.
pub fn simultaneous_greedys<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    ell: usize,
) -> Result<RunReport<T>> {
    check_ell(ell)?;
    let start = (f.calls(), sys.calls());
    let mut report = RunReport::new("simultaneous_greedys");
    report.param("ell", ell);
    let run = lazy_pairs(ground, f, sys, ell)?;
    Ok(finish(report, run, f, sys, start))
}

/// Reference implementation of [`simultaneous_greedys`] that re-scans every
/// pair at every step. Same output, many more oracle calls.
pub fn simultaneous_greedys_eager<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    ell: usize,
) -> Result<RunReport<T>> {
    check_ell(ell)?;
    let start = (f.calls(), sys.calls());
    let mut report = RunReport::new("simultaneous_greedys_eager");
    report.param("ell", ell);
    let run = eager_pairs(ground, f, sys, ell)?;
    Ok(finish(report, run, f, sys, start))
}
