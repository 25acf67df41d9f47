use crate::constraints::KnapsackSet;
use crate::error::{invalid, Result};
use crate::oracle::{CountedIndependence, CountedObjective};
use crate::report::RunReport;
use crate::scalar::Scalar;
use crate::set::ElementSet;
use crate::sgs::params::check_eps;
use crate::sgs::threshold::{check_rho, knapsack_sgs, Singletons};

/// One call made by [`density_bisection`].
#[derive(Debug, Clone)]
pub struct Probe<R> {
    pub k: usize,
    pub result: R,
    pub rejected: bool,
}

/// Upper grid index `max(1, ⌈ln(n)/δ⌉)`.
pub fn density_search_range(n: usize, delta: f64) -> usize {
    let k = ((n.max(1) as f64).ln() / delta).ceil();
    (k as usize).max(1)
}

/// Most calls [`density_bisection`] can make from `[1, k_upper]`:
/// `⌈log₂(k_upper - 1)⌉ + 1`.
pub fn inner_call_bound(k_upper: usize) -> usize {
    if k_upper <= 2 {
        return 1;
    }
    let span = k_upper - 1;
    (usize::BITS - (span - 1).leading_zeros()) as usize + 1
}

/// Bisection over grid indices `1..=k_upper` driven by the rejection flag.
///
/// `probe(k)` returns a result and whether a knapsack check rejected an
/// element. No rejection moves the lower bound up, a rejection moves the
/// upper bound down. Once the bounds are adjacent a final probe runs at the
/// lower bound. Every probe is returned in call order.
pub fn density_bisection<R, F>(k_upper: usize, mut probe: F) -> Result<Vec<Probe<R>>>
where
    F: FnMut(usize) -> Result<(R, bool)>,
{
    let (mut lo, mut hi) = (1usize, k_upper.max(1));
    let mut probes = Vec::new();
    while hi - lo > 1 {
        let k = (lo + hi).div_ceil(2);
        let (result, rejected) = probe(k)?;
        probes.push(Probe {
            k,
            result,
            rejected,
        });
        if rejected {
            hi = k;
        } else {
            lo = k;
        }
    }
    let (result, rejected) = probe(lo)?;
    probes.push(Probe {
        k: lo,
        result,
        rejected,
    });
    Ok(probes)
}

pub(crate) fn check_search(delta: f64, eps: f64, beta: f64, ell: usize) -> Result<()> {
    check_eps("delta", delta)?;
    check_eps("eps", eps)?;
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(invalid("beta", format!("must be positive, got {beta}")));
    }
    if ell == 0 {
        return Err(invalid("ell", "must be at least 1"));
    }
    Ok(())
}

/// Runs the bisection with `inner(rho)` and folds the probes into one report:
/// one candidate per inner call, the indicator of the final call.
pub(crate) fn search<T: Scalar>(
    report: &mut RunReport<T>,
    n: usize,
    delta: f64,
    beta: f64,
    delta_f: T,
    mut inner: impl FnMut(f64) -> Result<RunReport<T>>,
) -> Result<()> {
    let k_upper = density_search_range(n, delta);
    let scale = beta * delta_f.as_f64();
    let probes = density_bisection(k_upper, |k| {
        let rho = scale * (1.0 + delta).powi(k as i32);
        check_rho(rho)?;
        let r = inner(rho)?;
        let rejected = r.knapsack_rejected.unwrap_or(false);
        Ok((r, rejected))
    })?;
    report.param("k_upper", k_upper);
    for p in &probes {
        report.candidate(
            format!("k={} rho={}", p.k, p.result.params["rho"]),
            p.result.solution.clone(),
            p.result.value,
        );
        report.rounds += p.result.rounds;
    }
    let last = probes.last().expect("at least one probe");
    report.param("k_final", last.k);
    report.knapsack_rejected = Some(last.rejected);
    report.subcalls = probes.len();
    report.select_best();
    Ok(())
}

/// Binary search over density thresholds `ρ = β·Δ_f·(1+δ)^k`, running
/// [`knapsack_sgs`](crate::sgs::knapsack_sgs) at each probe and returning the
/// best set found.
#[allow(clippy::too_many_arguments)]
pub fn density_search_sgs<T: Scalar>(
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
    let mut report = RunReport::new("density_search_sgs");
    report
        .param("ell", ell)
        .param("delta", delta)
        .param("eps", eps)
        .param("beta", beta);
    let delta_f = Singletons::compute(ground, f)?.delta_f;
    search(&mut report, ground.len(), delta, beta, delta_f, |rho| {
        knapsack_sgs(ground, f, sys, knapsacks, ell, rho, eps)
    })?;
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    Ok(report)
}
