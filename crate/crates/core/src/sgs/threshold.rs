use crate::constraints::KnapsackSet;
use crate::error::{invalid, Result};
use crate::oracle::{argmax_singleton, CountedIndependence, CountedObjective};
use crate::report::{Accepted, RunReport};
use crate::scalar::Scalar;
use crate::set::{ElementId, ElementSet};
use crate::sgs::params::check_eps;
use crate::solution::Solution;

/// `f(∅)` and `f({u})` for every element of the ground set.
#[derive(Debug, Clone)]
pub(crate) struct Singletons<T> {
    pub f_empty: T,
    pub values: Vec<(ElementId, T)>,
    pub delta_f: T,
}

impl<T: Scalar> Singletons<T> {
    /// `|ground| + 1` value queries.
    pub fn compute(ground: &ElementSet, f: &CountedObjective<'_, T>) -> Result<Self> {
        let f_empty = f.value(&[])?;
        let values = f.singletons(ground)?;
        let delta_f = argmax_singleton(&values).map_or(T::zero(), |(v, _)| v);
        Ok(Self {
            f_empty,
            values,
            delta_f,
        })
    }

    /// Best singleton that fits every knapsack and the independence system,
    /// ties to the lowest id.
    pub fn best_feasible(
        &self,
        sys: &CountedIndependence<'_>,
        knapsacks: &KnapsackSet<T>,
    ) -> Option<(ElementId, T)> {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&a, &b| {
            self.values[b]
                .1
                .partial_cmp(&self.values[a].1)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(self.values[a].0.cmp(&self.values[b].0))
        });
        let zero = vec![T::zero(); knapsacks.m()];
        let empty_tally = vec![0; sys.tally_len()];
        order
            .into_iter()
            .map(|i| self.values[i])
            .find(|&(u, _)| knapsacks.can_add(&zero, u) && sys.can_add(&[], &empty_tally, u))
    }
}

/// Outcome of a threshold sweep.
#[derive(Debug, Clone)]
pub(crate) struct Sweep<T> {
    pub solutions: Vec<Solution<T>>,
    pub trace: Vec<Accepted<T>>,
    pub rounds: usize,
    pub rejected: bool,
}

/// Number of threshold rounds: the smallest `a` with `(1-ε)^a <= ε/n`,
/// computed by iterating the decay exactly as the sweep does.
pub fn threshold_rounds(n: usize, eps: f64) -> usize {
    let floor = eps / n as f64;
    let mut tau = 1.0;
    let mut rounds = 0;
    while tau > floor {
        rounds += 1;
        tau *= 1.0 - eps;
    }
    rounds
}

/// Descending-threshold sweep over ℓ solutions with a density gate
/// `gain >= max(τ, ρ·Σ_r c_r(u))` followed by the knapsack check.
///
/// Pairs are scanned in ascending `(u, j)` within a round. A pair whose last
/// seen gain is already below the gate is skipped without a query, since
/// gains only shrink. Independence and knapsack failures retire the pair.
pub(crate) fn sweep<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    knapsacks: &KnapsackSet<T>,
    singletons: &Singletons<T>,
    ell: usize,
    rho: T,
    eps: T,
) -> Result<Sweep<T>> {
    let n = ground.len();
    let mut solutions: Vec<Solution<T>> = (0..ell)
        .map(|_| Solution::empty(singletons.f_empty, f, sys, knapsacks))
        .collect();
    let mut out = Sweep {
        solutions: Vec::new(),
        trace: Vec::new(),
        rounds: 0,
        rejected: false,
    };
    if n == 0 {
        out.solutions = solutions;
        return Ok(out);
    }

    let mut used = vec![false; f.ground_size()];
    // Last observed gain of each pair, row-major by position in `ground`.
    let mut seen: Vec<T> = singletons
        .values
        .iter()
        .flat_map(|&(_, v)| std::iter::repeat_n(v - singletons.f_empty, ell))
        .collect();
    let mut dead = vec![false; n * ell];
    let density: Vec<T> = ground
        .iter()
        .map(|u| rho * knapsacks.total_cost(u))
        .collect();

    let delta_f = singletons.delta_f;
    let floor = eps / T::count(n) * delta_f;
    let mut tau = delta_f;
    while tau > floor {
        out.rounds += 1;
        for (pos, u) in ground.iter().enumerate() {
            let gate = tau.max(density[pos]);
            for j in 0..ell {
                if used[u] {
                    break;
                }
                let slot = pos * ell + j;
                if dead[slot] || seen[slot] < gate {
                    continue;
                }
                let sol = &mut solutions[j];
                let with = sol.value_with(f, u)?;
                let gain = with - sol.value();
                seen[slot] = gain;
                if gain < gate {
                    continue;
                }
                if !sol.fits(sys, u) {
                    dead[slot] = true;
                    continue;
                }
                if !sol.fits_knapsacks(knapsacks, u) {
                    out.rejected = true;
                    dead[slot] = true;
                    continue;
                }
                sol.push(f, sys, knapsacks, u, with);
                used[u] = true;
                out.trace.push(Accepted {
                    element: u,
                    solution: j,
                    gain,
                    threshold: Some(gate),
                });
            }
        }
        tau = tau * (T::one() - eps);
    }
    out.solutions = solutions;
    Ok(out)
}

fn check_common(ell: usize, eps: f64) -> Result<()> {
    if ell == 0 {
        return Err(invalid("ell", "must be at least 1"));
    }
    check_eps("eps", eps)
}

pub(crate) fn check_rho(rho: f64) -> Result<()> {
    if !(rho >= 0.0 && rho.is_finite()) {
        return Err(invalid(
            "rho",
            format!("must be finite and non-negative, got {rho}"),
        ));
    }
    Ok(())
}

fn solution_candidates<T: Scalar>(report: &mut RunReport<T>, run: &Sweep<T>) {
    for (j, s) in run.solutions.iter().enumerate() {
        report.candidate(format!("S{}", j + 1), s.to_set(), s.value());
    }
}

/// Threshold simultaneous greedy: accepts any feasible pair whose gain clears
/// a threshold that starts at `Δ_f` and decays by `1 - ε` per round.
pub fn fast_sgs<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    ell: usize,
    eps: f64,
) -> Result<RunReport<T>> {
    check_common(ell, eps)?;
    let start = (f.calls(), sys.calls());
    let mut report = RunReport::new("fast_sgs");
    report.param("ell", ell).param("eps", eps);

    let none = KnapsackSet::none(f.ground_size());
    let singletons = Singletons::compute(ground, f)?;
    let run = sweep(
        ground,
        f,
        sys,
        &none,
        &singletons,
        ell,
        T::zero(),
        T::lit(eps),
    )?;
    solution_candidates(&mut report, &run);
    report.select_best();
    report.trace = run.trace;
    report.rounds = run.rounds;
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    Ok(report)
}

/// Threshold simultaneous greedy with a density threshold `rho` and knapsack
/// budgets. The result is the best of the ℓ solutions and the best feasible
/// singleton; `knapsack_rejected` reports whether a knapsack check ever failed.
pub fn knapsack_sgs<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    knapsacks: &KnapsackSet<T>,
    ell: usize,
    rho: f64,
    eps: f64,
) -> Result<RunReport<T>> {
    check_common(ell, eps)?;
    check_rho(rho)?;
    let start = (f.calls(), sys.calls());
    let singletons = Singletons::compute(ground, f)?;
    let mut report = RunReport::new("knapsack_sgs");
    report.param("ell", ell).param("eps", eps).param("rho", rho);
    let run = sweep(
        ground,
        f,
        sys,
        knapsacks,
        &singletons,
        ell,
        T::lit(rho),
        T::lit(eps),
    )?;
    solution_candidates(&mut report, &run);
    if let Some((u, v)) = singletons.best_feasible(sys, knapsacks) {
        report.candidate(format!("{{{u}}}"), ElementSet::from_ids([u]), v);
    }
    report.select_best();
    report.knapsack_rejected = Some(run.rejected);
    report.trace = run.trace;
    report.rounds = run.rounds;
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    Ok(report)
}
