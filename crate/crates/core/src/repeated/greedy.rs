use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::oracle::{CountedIndependence, CountedObjective};
use crate::report::RunReport;
use crate::scalar::Scalar;
use crate::set::ElementSet;
use crate::sgs::lazy_pairs;

/// Lazy greedy: adds the feasible element of largest strictly positive gain
/// until none is left. Gains within rounding noise of the best count as tied
/// and ties go to the lowest id.
pub fn greedy<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
) -> Result<RunReport<T>> {
    let start = (f.calls(), sys.calls());
    let mut report = RunReport::new("greedy");
    let run = lazy_pairs(ground, f, sys, 1)?;
    let sol = &run.solutions[0];
    report.candidate("S", sol.to_set(), sol.value());
    report.select_best();
    report.rounds = run.trace.len();
    report.trace = run.trace;
    report.value_calls = f.calls() - start.0;
    report.independence_calls = sys.calls() - start.1;
    Ok(report)
}

/// Greedy on a random subsample keeping each element with probability
/// `1/(k+1)`. Sampling uses ChaCha8 seeded with `seed`.
pub fn sample_greedy<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    k: usize,
    seed: u64,
) -> Result<RunReport<T>> {
    if k == 0 {
        return Err(invalid("k", "must be at least 1"));
    }
    let mut r = sample_greedy_with_probability(ground, f, sys, 1.0 / (k + 1) as f64, seed)?;
    r.param("k", k);
    Ok(r)
}

/// [`sample_greedy`] with an explicit keep probability.
pub fn sample_greedy_with_probability<T: Scalar>(
    ground: &ElementSet,
    f: &CountedObjective<'_, T>,
    sys: &CountedIndependence<'_>,
    probability: f64,
    seed: u64,
) -> Result<RunReport<T>> {
    if !(0.0..=1.0).contains(&probability) {
        return Err(invalid(
            "probability",
            format!("must lie in [0, 1], got {probability}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: ElementSet = ground
        .iter()
        .filter(|_| rng.gen_bool(probability))
        .collect();
    let mut report = greedy(&sample, f, sys)?;
    report.algorithm = "sample_greedy".to_string();
    report
        .param("probability", probability)
        .param("seed", seed)
        .param("sampled", sample.len());
    Ok(report)
}
