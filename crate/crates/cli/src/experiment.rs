//! Runs the algorithms of a config over its sweep and writes the report.

use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use simgreedy::oracle::{CountedIndependence, CountedObjective};
use simgreedy::repeated::{
    density_rg_beta, density_rg_ell, density_search_rg, greedy, modified_repeated_greedy,
    repeated_greedy, repeated_greedy_ell, sample_greedy, DEFAULT_ALPHA,
};
use simgreedy::sgs::{
    choose_beta, choose_ell, density_search_sgs, fast_sgs, knapsack_sgs, simultaneous_greedys,
};
use simgreedy::Report;

use crate::config::{AlgorithmName, AlgorithmSpec, ExperimentConfig, OneOrMany};
use crate::problem::{build, load, points, Point, Problem};

pub const REPORT_HEADER: [&str; 8] = [
    "algorithm",
    "params",
    "size",
    "value",
    "value_calls",
    "independence_calls",
    "E",
    "ms",
];

const DEFAULT_EPS: f64 = 0.1;
const DEFAULT_DELTA: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub algorithm: String,
    pub params: String,
    pub size: usize,
    pub value: f64,
    pub value_calls: u64,
    pub independence_calls: u64,
    pub knapsack_rejected: Option<bool>,
    pub ms: f64,
}

/// One fully resolved parameter combination.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Params {
    ell: Option<usize>,
    eps: Option<f64>,
    delta: Option<f64>,
    rho: Option<f64>,
    beta: Option<f64>,
    seed: Option<u64>,
}

fn allowed(name: AlgorithmName) -> &'static [&'static str] {
    use AlgorithmName::*;
    match name {
        Greedy => &[],
        SampleGreedy => &["seed"],
        SimultaneousGreedys => &["ell"],
        FastSgs => &["ell", "eps"],
        KnapsackSgs => &["ell", "rho", "eps"],
        DensitySearchSgs => &["ell", "delta", "eps", "beta"],
        RepeatedGreedy => &["ell", "alpha"],
        ModifiedRepeatedGreedy => &["ell", "rho", "eps", "alpha"],
        DensitySearchRg => &["ell", "delta", "eps", "beta", "alpha"],
    }
}

fn grid<T: Clone>(v: &Option<OneOrMany<T>>) -> Vec<Option<T>> {
    match v {
        Some(v) => v.values().into_iter().map(Some).collect(),
        None => vec![None],
    }
}

/// Cartesian product of the listed parameters, in `ell, eps, delta, rho,
/// beta, seed` order.
fn expand(spec: &AlgorithmSpec) -> Result<Vec<Params>> {
    let given = [
        ("ell", spec.ell.is_some()),
        ("eps", spec.eps.is_some()),
        ("delta", spec.delta.is_some()),
        ("rho", spec.rho.is_some()),
        ("beta", spec.beta.is_some()),
        ("seed", spec.seed.is_some()),
        ("alpha", spec.alpha.is_some()),
    ];
    for (key, present) in given {
        if present && !allowed(spec.name).contains(&key) {
            bail!("{key} is not a parameter of {}", spec.name.as_str());
        }
    }
    let mut out = Vec::new();
    for ell in grid(&spec.ell) {
        for eps in grid(&spec.eps) {
            for delta in grid(&spec.delta) {
                for rho in grid(&spec.rho) {
                    for beta in grid(&spec.beta) {
                        for seed in grid(&spec.seed) {
                            out.push(Params {
                                ell,
                                eps,
                                delta,
                                rho,
                                beta,
                                seed,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn execute(spec: &AlgorithmSpec, p: Params, prob: &Problem<'_>) -> Result<Report> {
    let d = prob.declared();
    let m = prob.knapsacks.m();
    let alpha = spec.alpha.unwrap_or(DEFAULT_ALPHA);
    let eps = p.eps.unwrap_or(DEFAULT_EPS);
    let delta = p.delta.unwrap_or(DEFAULT_DELTA);
    let rho = p.rho.unwrap_or(0.0);
    let mono = spec.monotone;

    let f = CountedObjective::new(prob.objective);
    let sys = CountedIndependence::new(prob.system.as_ref());
    let folded = CountedIndependence::new(prob.folded.as_ref());
    let ground = &prob.ground;
    let ks = &prob.knapsacks;

    use AlgorithmName::*;
    let report = match spec.name {
        Greedy => greedy(ground, &f, &folded)?,
        SampleGreedy => sample_greedy(ground, &f, &folded, d.k, p.seed.unwrap_or(0))?,
        SimultaneousGreedys => {
            let ell = p.ell.unwrap_or_else(|| choose_ell(d.class, d.k, 0, mono));
            simultaneous_greedys(ground, &f, &folded, ell)?
        }
        FastSgs => {
            let ell = p.ell.unwrap_or_else(|| choose_ell(d.class, d.k, 0, mono));
            fast_sgs(ground, &f, &folded, ell, eps)?
        }
        KnapsackSgs => {
            let ell = p.ell.unwrap_or_else(|| choose_ell(d.class, d.k, m, mono));
            knapsack_sgs(ground, &f, &sys, ks, ell, rho, eps)?
        }
        DensitySearchSgs => {
            let ell = p.ell.unwrap_or_else(|| choose_ell(d.class, d.k, m, mono));
            let beta = match p.beta {
                Some(b) => b,
                None => choose_beta(d.class, d.k, ell, m, eps, mono)?,
            };
            density_search_sgs(ground, &f, &sys, ks, ell, delta, eps, beta)?
        }
        RepeatedGreedy => {
            let ell = match p.ell {
                Some(l) => l,
                None => repeated_greedy_ell(d.k, alpha, mono)?,
            };
            repeated_greedy(ground, &f, &folded, ell)?
        }
        ModifiedRepeatedGreedy => {
            let ell = match p.ell {
                Some(l) => l,
                None => density_rg_ell(d.k, m, alpha, mono)?,
            };
            modified_repeated_greedy(ground, &f, &sys, ks, ell, rho, eps)?
        }
        DensitySearchRg => {
            let ell = match p.ell {
                Some(l) => l,
                None => density_rg_ell(d.k, m, alpha, mono)?,
            };
            let beta = match p.beta {
                Some(b) => b,
                None => density_rg_beta(d.k, ell, m, eps, alpha, mono)?,
            };
            density_search_rg(ground, &f, &sys, ks, ell, delta, eps, beta)?
        }
    };
    Ok(report)
}

fn join_params(point: &Point, rest: &str) -> String {
    match (point.label(), rest.is_empty()) {
        (Some(p), true) => p,
        (Some(p), false) => format!("{p};{rest}"),
        (None, _) => rest.to_string(),
    }
}

/// Runs every algorithm at every sweep point. Rows are ordered by sweep
/// point, then algorithm as listed, then parameter combination.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<Row>> {
    let loaded = load(cfg)?;
    let mut problems = Vec::new();
    for point in points(cfg) {
        let prob = build(cfg, &loaded, &point).with_context(|| match point.label() {
            Some(l) => format!("building constraints at {l}"),
            None => "building constraints".to_string(),
        })?;
        problems.push((point, prob));
    }
    let grids = cfg
        .algorithms
        .iter()
        .map(expand)
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::new();
    for (point, prob) in &problems {
        for (spec, grid) in cfg.algorithms.iter().zip(&grids) {
            let mut batch = Vec::with_capacity(grid.len());
            for &p in grid {
                let start = Instant::now();
                let r = execute(spec, p, prob)
                    .with_context(|| format!("running {}", spec.name.as_str()))?;
                let ms = start.elapsed().as_secs_f64() * 1e3;
                batch.push(Row {
                    algorithm: spec.name.as_str().to_string(),
                    params: join_params(point, &r.params_string()),
                    size: r.solution.len(),
                    value: r.value,
                    value_calls: r.value_calls,
                    independence_calls: r.independence_calls,
                    knapsack_rejected: r.knapsack_rejected,
                    ms,
                });
            }
            if spec.max_over_ell {
                let best = max_row(spec, point, &batch, grid);
                batch.extend(best);
            }
            rows.extend(batch);
        }
    }
    Ok(rows)
}

/// The best of a batch of per-ℓ rows, with the batch's total cost.
fn max_row(spec: &AlgorithmSpec, point: &Point, batch: &[Row], grid: &[Params]) -> Option<Row> {
    let best = batch.iter().fold(None::<&Row>, |b, r| match b {
        Some(b) if b.value >= r.value => Some(b),
        _ => Some(r),
    })?;
    let ells: Vec<String> = grid
        .iter()
        .map(|p| {
            p.ell
                .map_or_else(|| "default".to_string(), |l| l.to_string())
        })
        .collect();
    Some(Row {
        algorithm: format!("{}_max", spec.name.as_str()),
        params: join_params(point, &format!("ell={}", ells.join("/"))),
        size: best.size,
        value: best.value,
        value_calls: batch.iter().map(|r| r.value_calls).sum(),
        independence_calls: batch.iter().map(|r| r.independence_calls).sum(),
        knapsack_rejected: None,
        ms: batch.iter().map(|r| r.ms).sum(),
    })
}

pub fn write_report<W: Write>(rows: &[Row], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPORT_HEADER)?;
    for r in rows {
        let e = match r.knapsack_rejected {
            None => String::new(),
            Some(b) => u8::from(b).to_string(),
        };
        w.write_record([
            r.algorithm.clone(),
            r.params.clone(),
            r.size.to_string(),
            r.value.to_string(),
            r.value_calls.to_string(),
            r.independence_calls.to_string(),
            e,
            format!("{:.3}", r.ms),
        ])?;
    }
    w.flush()?;
    Ok(())
}
