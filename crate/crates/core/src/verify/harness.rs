use std::io;

use crate::error::Result;
use crate::objectives::Instance;
use crate::oracle::{CountedIndependence, CountedObjective};
use crate::report::RunReport;
use crate::verify::brute::brute_force_opt;

const SLACK: f64 = 1e-9;

/// Column order of the harness CSV.
pub const CSV_HEADER: [&str; 8] = [
    "instance",
    "algorithm",
    "value",
    "opt",
    "ratio",
    "calls",
    "bound",
    "pass",
];

#[derive(Debug, Clone, PartialEq)]
pub struct HarnessRow {
    pub instance: String,
    pub algorithm: String,
    pub value: f64,
    pub opt: f64,
    /// `value / opt`, or 1 when `opt` is 0.
    pub ratio: f64,
    /// Value plus independence queries.
    pub calls: u64,
    pub bound: f64,
    /// `value >= bound - 1e-9`.
    pub pass: bool,
}

type RunFn<'a> = dyn Fn(
        &Instance<f64>,
        &CountedObjective<'_, f64>,
        &CountedIndependence<'_>,
    ) -> Result<RunReport<f64>>
    + 'a;
type BoundFn<'a> = dyn Fn(&Instance<f64>, &RunReport<f64>, f64) -> f64 + 'a;

/// An algorithm under test together with the lower bound it must meet,
/// expressed as a function of the instance, its report and `OPT`.
pub struct Contender<'a> {
    pub name: String,
    run: Box<RunFn<'a>>,
    bound: Box<BoundFn<'a>>,
}

impl<'a> Contender<'a> {
    pub fn new(
        name: impl Into<String>,
        run: impl Fn(
                &Instance<f64>,
                &CountedObjective<'_, f64>,
                &CountedIndependence<'_>,
            ) -> Result<RunReport<f64>>
            + 'a,
        bound: impl Fn(&Instance<f64>, &RunReport<f64>, f64) -> f64 + 'a,
    ) -> Self {
        Self {
            name: name.into(),
            run: Box::new(run),
            bound: Box::new(bound),
        }
    }
}

/// Seed of trial `t` in a sweep started from `seed`.
pub(crate) fn trial_seed(seed: u64, t: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(t as u64)
}

/// Runs every contender on `trials` generated instances and compares each
/// result against its bound, with `OPT` from exhaustive search.
pub fn ratio_harness(
    contenders: &[Contender<'_>],
    generate: &dyn Fn(u64) -> Result<Instance<f64>>,
    trials: usize,
    seed: u64,
) -> Result<Vec<HarnessRow>> {
    let mut rows = Vec::with_capacity(trials * contenders.len());
    for t in 0..trials {
        let inst = generate(trial_seed(seed, t))?;
        let opt = brute_force_opt(
            &inst.ground,
            inst.objective.as_ref(),
            inst.system.as_ref(),
            &inst.knapsacks,
        )?
        .opt_value;
        for c in contenders {
            let f = CountedObjective::new(inst.objective.as_ref());
            let sys = CountedIndependence::new(inst.system.as_ref());
            let report = (c.run)(&inst, &f, &sys)?;
            let bound = (c.bound)(&inst, &report, opt);
            rows.push(HarnessRow {
                instance: inst.label.clone(),
                algorithm: c.name.clone(),
                value: report.value,
                opt,
                ratio: if opt > 0.0 { report.value / opt } else { 1.0 },
                calls: report.value_calls + report.independence_calls,
                bound,
                pass: report.value >= bound - SLACK,
            });
        }
    }
    Ok(rows)
}

/// Writes rows under [`CSV_HEADER`].
pub fn write_csv<W: io::Write>(rows: &[HarnessRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.instance.clone(),
            r.algorithm.clone(),
            r.value.to_string(),
            r.opt.to_string(),
            r.ratio.to_string(),
            r.calls.to_string(),
            r.bound.to_string(),
            r.pass.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
