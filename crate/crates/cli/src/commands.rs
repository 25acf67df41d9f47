//! The `verify`, `hardness` and `bruteforce` subcommands.

use std::io::Write;

use anyhow::{bail, Context, Result};
use simgreedy::constraints::{build_cardinality, build_hardness_m, IndependenceSystem};
use simgreedy::verify::{brute_force_opt, suites, HarnessRow, BRUTE_FORCE_CAP};
use simgreedy::{ElementSet, KnapsackSet, Modular};

use crate::config::ExperimentConfig;
use crate::problem::{build, load, points};

/// Rows of every requested suite, in suite order.
pub fn verify(
    names: &[String],
    trials: usize,
    seed: u64,
) -> Result<Vec<(String, Vec<HarnessRow>)>> {
    let names: Vec<String> = if names.is_empty() {
        suites::NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        names.to_vec()
    };
    names
        .into_iter()
        .map(|name| {
            let rows =
                suites::run_suite(&name, trials, seed).with_context(|| format!("suite {name}"))?;
            Ok((name, rows))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HardnessSizes {
    pub n: usize,
    /// Largest independent set of M(k, h, m), by enumeration.
    pub m_size: usize,
    /// Largest independent set of the cardinality system M'.
    pub m_prime_size: usize,
    /// `k(m - 2km/h) + 2km/h`.
    pub formula: usize,
}

fn max_independent(sys: &dyn IndependenceSystem) -> Result<usize> {
    let n = sys.ground_size();
    let ones = Modular::new(vec![1.0; n], 0.0)?;
    let best = brute_force_opt(
        &ElementSet::from_ids(0..n),
        &ones,
        sys,
        &KnapsackSet::none(n),
    )?;
    Ok(best.opt_set.len())
}

pub fn hardness(k: usize, h: usize, m: usize) -> Result<HardnessSizes> {
    let sys = build_hardness_m(k, h, m)?;
    let n = sys.ground_size();
    if n > BRUTE_FORCE_CAP {
        bail!("M({k},{h},{m}) has {n} elements; enumeration is capped at {BRUTE_FORCE_CAP}");
    }
    Ok(HardnessSizes {
        n,
        m_size: max_independent(&sys)?,
        m_prime_size: max_independent(&build_cardinality(n, m))?,
        formula: sys.max_independent_size(),
    })
}

/// Exact optimum at every sweep point, as CSV.
pub fn bruteforce<W: Write>(cfg: &ExperimentConfig, out: W) -> Result<()> {
    let loaded = load(cfg)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["point", "opt", "size", "set", "feasible_sets"])?;
    for point in points(cfg) {
        let prob = build(cfg, &loaded, &point)?;
        let best = brute_force_opt(
            &prob.ground,
            prob.objective,
            prob.system.as_ref(),
            &prob.knapsacks,
        )?;
        let set: Vec<String> = best
            .opt_set
            .iter()
            .map(|u| loaded.labels[u].clone())
            .collect();
        w.write_record([
            point.label().unwrap_or_default(),
            best.opt_value.to_string(),
            best.opt_set.len().to_string(),
            set.join(" "),
            best.feasible_count.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
