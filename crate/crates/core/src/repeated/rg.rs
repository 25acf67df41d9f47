use crate::constraints::KnapsackSet;
use crate::error::{invalid, Result};
use crate::oracle::{CountedIndependence, CountedObjective};
use crate::repeated::greedy::greedy;
use crate::repeated::usm::usm_double_greedy;
use crate::report::RunReport;
use crate::scalar::Scalar;
use crate::set::ElementSet;
use crate::sgs::{check_eps, check_rho, check_search, search, sweep, Singletons};

fn check_ell(ell: usize) -> Result<()> {
    if ell == 0 {
        return Err(invalid("ell", "must be at least 1"));
    }
    Ok(())
}

/// ℓ rounds of greedy on a shrinking ground set, each result filtered through
/// [`usm_double_greedy`]. Returns the best of all greedy and filtered sets.
pub fn repeated_greedy<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    ell: usize,
) -> Result<RunReport<T>> {
    check_ell(ell)?;
    let start = (f.calls(), sys.calls());
    let mut report = RunReport::new("repeated_greedy");
    report.param("ell", ell);
    let mut remaining = ground.clone();
    for i in 1..=ell {
        let round = greedy(&remaining, f, sys)?;
        let (filtered, filtered_value) = usm_double_greedy(&round.solution, f)?;
        remaining = remaining.difference(&round.solution);
        report.trace.extend(round.trace.into_iter().map(|mut a| {
            a.solution = i - 1;
            a
        }));
        report.candidate(format!("S{i}"), round.solution, round.value);
        report.candidate(format!("S'{i}"), filtered, filtered_value);
        report.rounds += round.rounds;
        report.subcalls += 1;
    }
    report.select_best();
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    Ok(report)
}

/// Result of one modified greedy pass: the report plus the threshold solution
/// itself, which is what the repeated variant removes from the ground set.
struct Pass<T> {
    report: RunReport<T>,
    grown: ElementSet,
}

fn modified_pass<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    knapsacks: &KnapsackSet<T>,
    rho: f64,
    eps: f64,
) -> Result<Pass<T>> {
    let start = (f.calls(), sys.calls());
    let mut report = RunReport::new("modified_greedy");
    report.param("rho", rho).param("eps", eps);
    let singletons = Singletons::compute(ground, f)?;
    let run = sweep(
        ground,
        f,
        sys,
        knapsacks,
        &singletons,
        1,
        T::lit(rho),
        T::lit(eps),
    )?;
    let sol = &run.solutions[0];
    let grown = sol.to_set();
    report.candidate("S", grown.clone(), sol.value());
    if let Some((u, v)) = singletons.best_feasible(sys, knapsacks) {
        report.candidate(format!("{{{u}}}"), ElementSet::from_ids([u]), v);
    }
    report.select_best();
    report.knapsack_rejected = Some(run.rejected);
    report.trace = run.trace;
    report.rounds = run.rounds;
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    Ok(Pass { report, grown })
}

/// Single-solution threshold greedy with density gate `rho` and knapsack
/// budgets; returns the better of its solution and the best feasible singleton.
pub fn modified_greedy<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    knapsacks: &KnapsackSet<T>,
    rho: f64,
    eps: f64,
) -> Result<RunReport<T>> {
    check_eps("eps", eps)?;
    check_rho(rho)?;
    Ok(modified_pass(ground, f, sys, knapsacks, rho, eps)?.report)
}

/// [`repeated_greedy`] with [`modified_greedy`] as the inner routine.
///
/// Each round removes the threshold solution from the ground set and filters
/// it through [`usm_double_greedy`]; the round's best singleton stays in the
/// candidate pool. `knapsack_rejected` is set if any round saw a rejection.
#[allow(clippy::too_many_arguments)]
pub fn modified_repeated_greedy<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    knapsacks: &KnapsackSet<T>,
    ell: usize,
    rho: f64,
    eps: f64,
) -> Result<RunReport<T>> {
    check_ell(ell)?;
    check_eps("eps", eps)?;
    check_rho(rho)?;
    let start = (f.calls(), sys.calls());
    let mut report = RunReport::new("modified_repeated_greedy");
    report.param("ell", ell).param("rho", rho).param("eps", eps);
    let mut remaining = ground.clone();
    let mut rejected = false;
    for i in 1..=ell {
        let pass = modified_pass(&remaining, f, sys, knapsacks, rho, eps)?;
        rejected |= pass.report.knapsack_rejected == Some(true);
        let (filtered, filtered_value) = usm_double_greedy(&pass.grown, f)?;
        remaining = remaining.difference(&pass.grown);
        for c in pass.report.candidates {
            let label = if c.label == "S" {
                format!("S{i}")
            } else {
                format!("{}@{i}", c.label)
            };
            report.candidate(label, c.set, c.value);
        }
        report.candidate(format!("S'{i}"), filtered, filtered_value);
        report.rounds += pass.report.rounds;
        report
            .trace
            .extend(pass.report.trace.into_iter().map(|mut a| {
                a.solution = i - 1;
                a
            }));
        report.subcalls += 1;
    }
    report.select_best();
    report.knapsack_rejected = Some(rejected);
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    Ok(report)
}

/// Binary search over density thresholds `ρ = β·Δ_f·(1+δ)^k`, running
/// [`modified_repeated_greedy`] at each probe.
#[allow(clippy::too_many_arguments)]
pub fn density_search_rg<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    knapsacks: &KnapsackSet<T>,
    ell: usize,
    delta: f64,
    eps: f64,
    beta: f64,
) -> Result<RunReport<T>> {
    check_search(delta, eps, beta, ell)?;
    let start = (f.calls(), sys.calls());
    let mut report = RunReport::new("density_search_rg");
    report
        .param("ell", ell)
        .param("delta", delta)
        .param("eps", eps)
        .param("beta", beta);
    let delta_f = Singletons::compute(ground, f)?.delta_f;
    search(&mut report, ground.len(), delta, beta, delta_f, |rho| {
        modified_repeated_greedy(ground, f, sys, knapsacks, ell, rho, eps)
    })?;
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    Ok(report)
}
