//! Prebuilt instance pools and contenders binding each algorithm to its
//! approximation guarantee.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constraints::{IndependenceSystem, Redeclared, SystemClass};
use crate::error::{Error, Result};
use crate::objectives::{random_instance, ConstraintKind, Instance, InstanceKind, ObjectiveKind};
use crate::repeated::{
    density_rg_beta, density_rg_ell, density_search_rg, modified_repeated_greedy, repeated_greedy,
    repeated_greedy_ell, DEFAULT_ALPHA,
};
use crate::report::RunReport;
use crate::sgs::{
    choose_beta, choose_ell, density_search_sgs, exchange_bound, knapsack_sgs, simultaneous_greedys,
};
use crate::verify::harness::{ratio_harness, Contender, HarnessRow};

/// Suite names accepted by [`run_suite`].
pub const NAMES: [&str; 7] = [
    "sgs-extendible",
    "sgs-system",
    "knapsack-sgs",
    "density-search-sgs",
    "repeated-greedy",
    "modified-repeated-greedy",
    "density-search-rg",
];

const OBJECTIVES: [ObjectiveKind; 3] = [
    ObjectiveKind::Coverage,
    ObjectiveKind::GraphCut,
    ObjectiveKind::Diverse,
];

/// Threshold error used by the thresholded suites.
pub const EPS: f64 = 0.1;
/// Grid error used by the density-search suites.
pub const DELTA: f64 = 0.1;
/// Density thresholds tried by the fixed-ρ suites, as multiples of `Δ_f`.
pub const RHO_MULTIPLIERS: [f64; 4] = [0.0, 0.25, 1.0, 4.0];

fn pick(
    seed: u64,
    constraints: &[ConstraintKind],
    knapsacks: &[usize],
    n: (usize, usize),
) -> Result<Instance<f64>> {
    // Separate stream from the one random_instance draws from the same seed.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x005e_ed0f_5eed);
    let objective = *OBJECTIVES.choose(&mut rng).expect("non-empty");
    let constraint = *constraints.choose(&mut rng).expect("non-empty");
    let m = *knapsacks.choose(&mut rng).expect("non-empty");
    let size = rng.gen_range(n.0..=n.1);
    random_instance(seed, size, InstanceKind::new(objective, constraint, m))
}

/// Intersections of 1 to 3 partition matroids, `n` in 8..=12, no knapsacks.
pub fn extendible_instance(seed: u64) -> Result<Instance<f64>> {
    let kinds: Vec<_> = (1..=3)
        .map(|k| ConstraintKind::PartitionIntersection { k })
        .collect();
    pick(seed, &kinds, &[0], (8, 12))
}

/// Hardness systems, interval separation and partition intersections, all
/// declared as k-systems; `n` in 8..=12, no knapsacks.
pub fn system_instance(seed: u64) -> Result<Instance<f64>> {
    let kinds = [
        ConstraintKind::HardnessM { k: 1 },
        ConstraintKind::HardnessM { k: 2 },
        ConstraintKind::Interval,
        ConstraintKind::PartitionIntersection { k: 2 },
        ConstraintKind::PartitionIntersection { k: 3 },
    ];
    Ok(as_k_system(pick(seed, &kinds, &[0], (8, 12))?))
}

/// One or two knapsacks over assorted k-extendible constraints, `n` in 6..=10.
pub fn knapsack_instance(seed: u64) -> Result<Instance<f64>> {
    let kinds = [
        ConstraintKind::Cardinality,
        ConstraintKind::PartitionIntersection { k: 1 },
        ConstraintKind::PartitionIntersection { k: 2 },
        ConstraintKind::Interval,
        ConstraintKind::HardnessM { k: 1 },
    ];
    pick(seed, &kinds, &[1, 2], (6, 10))
}

/// Replaces the declared class by the weaker k-system class.
pub fn as_k_system(mut inst: Instance<f64>) -> Instance<f64> {
    let declared = inst.system.declared().as_system();
    let inner: Box<dyn IndependenceSystem> = inst.system;
    inst.system = Box::new(Redeclared::new(inner, declared));
    inst
}

fn delta_f(inst: &Instance<f64>) -> f64 {
    inst.ground
        .iter()
        .map(|u| inst.objective.evaluate(&[u]))
        .fold(0.0, f64::max)
}

fn rejected(r: &RunReport<f64>) -> bool {
    r.knapsack_rejected == Some(true)
}

/// Simultaneous greedy with `ℓ = k + 1` on k-extendible instances.
pub fn sgs_extendible<'a>() -> Vec<Contender<'a>> {
    vec![Contender::new(
        "simultaneous_greedys(ell=k+1)",
        |inst, f, sys| simultaneous_greedys(&inst.ground, f, sys, inst.system.declared().k + 1),
        |inst, _, opt| {
            let k = inst.system.declared().k as f64;
            if inst.monotone {
                opt / (k + 1.0)
            } else {
                k / ((k + 1.0) * (k + 1.0)) * opt
            }
        },
    )]
}

/// Simultaneous greedy with the k-system rule for `ℓ`.
pub fn sgs_system<'a>() -> Vec<Contender<'a>> {
    vec![Contender::new(
        "simultaneous_greedys(k-system ell)",
        |inst, f, sys| {
            let ell = choose_ell(
                SystemClass::KSystem,
                inst.system.declared().k,
                0,
                inst.monotone,
            );
            simultaneous_greedys(&inst.ground, f, sys, ell)
        },
        |inst, _, opt| {
            let k = inst.system.declared().k as f64;
            if inst.monotone {
                opt / (k + 1.0)
            } else {
                opt / (1.0 + (k + 2.0).sqrt()).powi(2)
            }
        },
    )]
}

/// Fixed-ρ knapsack simultaneous greedy, checked against the case split on
/// the rejection indicator.
pub fn knapsack_sgs_cases<'a>() -> Vec<Contender<'a>> {
    RHO_MULTIPLIERS
        .iter()
        .map(|&c| {
            Contender::new(
                format!("knapsack_sgs(rho={c}*delta_f)"),
                move |inst, f, sys| {
                    let d = inst.system.declared();
                    let ell = choose_ell(d.class, d.k, inst.knapsacks.m(), inst.monotone);
                    knapsack_sgs(
                        &inst.ground,
                        f,
                        sys,
                        &inst.knapsacks,
                        ell,
                        c * delta_f(inst),
                        EPS,
                    )
                },
                move |inst, report, opt| {
                    let rho = c * delta_f(inst);
                    if rejected(report) {
                        return rho / 2.0;
                    }
                    let d = inst.system.declared();
                    let m = inst.knapsacks.m() as f64;
                    let ell = choose_ell(d.class, d.k, inst.knapsacks.m(), inst.monotone);
                    let p = exchange_bound(d, ell) as f64;
                    let share = if inst.monotone {
                        1.0 - EPS
                    } else {
                        1.0 - 1.0 / ell as f64 - EPS
                    };
                    (1.0 - EPS) / (p + 1.0) * (share * opt - m * rho)
                },
            )
        })
        .collect()
}

/// Density search over knapsack simultaneous greedy with default parameters.
pub fn density_search_sgs_default<'a>() -> Vec<Contender<'a>> {
    vec![Contender::new(
        "density_search_sgs(defaults)",
        |inst, f, sys| {
            let d = inst.system.declared();
            let m = inst.knapsacks.m();
            let ell = choose_ell(d.class, d.k, m, inst.monotone);
            let beta = choose_beta(d.class, d.k, ell, m, EPS, inst.monotone)?;
            density_search_sgs(&inst.ground, f, sys, &inst.knapsacks, ell, DELTA, EPS, beta)
        },
        |inst, _, opt| {
            let d = inst.system.declared();
            let m = inst.knapsacks.m();
            let ell = choose_ell(d.class, d.k, m, inst.monotone);
            let denom = (exchange_bound(d, ell) + 1 + 2 * m) as f64;
            if inst.monotone {
                (1.0 - DELTA) * (1.0 - EPS).powi(2) / denom * opt
            } else {
                (1.0 - DELTA) * (1.0 - 2.0 * EPS).powi(2) * (1.0 - 1.0 / ell as f64) / denom * opt
            }
        },
    )]
}

fn rg_denominator(k: usize, m: usize, ell: usize) -> f64 {
    (k + 2 * m + 1) as f64 + DEFAULT_ALPHA * (ell - 1) as f64 / 2.0
}

/// Repeated greedy with the prescribed number of rounds.
pub fn repeated_greedy_default<'a>() -> Vec<Contender<'a>> {
    vec![Contender::new(
        "repeated_greedy(alpha=3)",
        |inst, f, sys| {
            let ell = repeated_greedy_ell(inst.system.declared().k, DEFAULT_ALPHA, inst.monotone)?;
            repeated_greedy(&inst.ground, f, sys, ell)
        },
        |inst, _, opt| {
            let k = inst.system.declared().k;
            let ell = repeated_greedy_ell(k, DEFAULT_ALPHA, inst.monotone).expect("valid alpha");
            if inst.monotone {
                opt / (k + 1) as f64
            } else {
                (1.0 - 1.0 / ell as f64) / rg_denominator(k, 0, ell) * opt
            }
        },
    )]
}

/// Fixed-ρ modified repeated greedy, checked against its case split.
pub fn modified_repeated_greedy_cases<'a>() -> Vec<Contender<'a>> {
    RHO_MULTIPLIERS
        .iter()
        .map(|&c| {
            Contender::new(
                format!("modified_repeated_greedy(rho={c}*delta_f)"),
                move |inst, f, sys| {
                    let ell = density_rg_ell(
                        inst.system.declared().k,
                        inst.knapsacks.m(),
                        DEFAULT_ALPHA,
                        inst.monotone,
                    )?;
                    modified_repeated_greedy(
                        &inst.ground,
                        f,
                        sys,
                        &inst.knapsacks,
                        ell,
                        c * delta_f(inst),
                        EPS,
                    )
                },
                move |inst, report, opt| {
                    let rho = c * delta_f(inst);
                    if rejected(report) {
                        return rho / 2.0;
                    }
                    let k = inst.system.declared().k;
                    let m = inst.knapsacks.m();
                    let ell =
                        density_rg_ell(k, m, DEFAULT_ALPHA, inst.monotone).expect("valid alpha");
                    let share = if inst.monotone {
                        1.0 - EPS
                    } else {
                        1.0 - 1.0 / ell as f64 - EPS
                    };
                    (1.0 - EPS) / rg_denominator(k, 0, ell) * (share * opt - rho * m as f64)
                },
            )
        })
        .collect()
}

/// Density search over modified repeated greedy with default parameters.
pub fn density_search_rg_default<'a>() -> Vec<Contender<'a>> {
    vec![Contender::new(
        "density_search_rg(defaults)",
        |inst, f, sys| {
            let k = inst.system.declared().k;
            let m = inst.knapsacks.m();
            let ell = density_rg_ell(k, m, DEFAULT_ALPHA, inst.monotone)?;
            let beta = density_rg_beta(k, ell, m, EPS, DEFAULT_ALPHA, inst.monotone)?;
            density_search_rg(&inst.ground, f, sys, &inst.knapsacks, ell, DELTA, EPS, beta)
        },
        |inst, _, opt| {
            let k = inst.system.declared().k;
            let m = inst.knapsacks.m();
            let ell = density_rg_ell(k, m, DEFAULT_ALPHA, inst.monotone).expect("valid alpha");
            let denom = rg_denominator(k, m, ell);
            if inst.monotone {
                (1.0 - DELTA) * (1.0 - EPS).powi(2) / denom * opt
            } else {
                (1.0 - DELTA) * (1.0 - 2.0 * EPS).powi(2) * (1.0 - 1.0 / ell as f64) / denom * opt
            }
        },
    )]
}

/// Runs the named suite over `trials` seeded instances.
pub fn run_suite(name: &str, trials: usize, seed: u64) -> Result<Vec<HarnessRow>> {
    let (contenders, generate): (Vec<Contender>, fn(u64) -> Result<Instance<f64>>) = match name {
        "sgs-extendible" => (sgs_extendible(), extendible_instance),
        "sgs-system" => (sgs_system(), system_instance),
        "knapsack-sgs" => (knapsack_sgs_cases(), knapsack_instance),
        "density-search-sgs" => (density_search_sgs_default(), knapsack_instance),
        "repeated-greedy" => (repeated_greedy_default(), system_instance),
        "modified-repeated-greedy" => (modified_repeated_greedy_cases(), knapsack_instance),
        "density-search-rg" => (density_search_rg_default(), knapsack_instance),
        other => return Err(Error::UnknownKind(other.to_string())),
    };
    ratio_harness(&contenders, &generate, trials, seed)
}
