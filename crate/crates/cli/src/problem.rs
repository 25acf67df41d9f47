//! Turns a config into objective, constraints and knapsacks for one sweep
//! point.

use std::collections::BTreeMap;

use anyhow::{bail, ensure, Context, Result};
use simgreedy::constraints::{
    admissible_ground, build_cardinality, build_hardness_m, build_intersection,
    build_interval_separation, build_partition_limit, Declared, IndependenceSystem, KnapsackSystem,
    Redeclared,
};
use simgreedy::objectives::cosine_kernel;
use simgreedy::{
    Coverage, DiverseSummarization, ElementSet, GraphCut, KnapsackSet, Modular, Objective,
};

use crate::config::{
    ClassSpec, ExperimentConfig, KnapsackSpec, ObjectiveSpec, PartSpec, SweepSpec,
};
use crate::ingest::{
    align, ingest_features, ingest_metadata, ingest_similarity, rating_cost, MetaRow,
};

/// Everything read from disk, shared by all sweep points.
pub struct Loaded {
    pub labels: Vec<String>,
    pub objective: Box<dyn Objective<f64>>,
    /// Metadata in element order.
    pub meta: Option<Vec<MetaRow>>,
}

impl Loaded {
    pub fn n(&self) -> usize {
        self.labels.len()
    }
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub fn load(cfg: &ExperimentConfig) -> Result<Loaded> {
    let (labels, objective): (Vec<String>, Box<dyn Objective<f64>>) = match &cfg.objective {
        ObjectiveSpec::Modular { weights, bias } => (
            numbered(weights.len()),
            Box::new(Modular::new(weights.clone(), *bias)?),
        ),
        ObjectiveSpec::Coverage { sets, weights } => (
            numbered(sets.len()),
            Box::new(Coverage::new(sets.clone(), weights.clone())?),
        ),
        ObjectiveSpec::GraphCut { weights } => {
            let n = weights.len();
            if let Some(i) = weights.iter().position(|r| r.len() != n) {
                bail!(
                    "graph_cut weights row {i} has {} entries, expected {n}",
                    weights[i].len()
                );
            }
            (numbered(n), Box::new(GraphCut::new(n, weights.concat())?))
        }
        ObjectiveSpec::Diverse {
            lambda,
            sigma,
            features,
            similarity,
        } => match (features, similarity) {
            (Some(path), _) => {
                let feats = ingest_features(path)?;
                let sigma = sigma.context("sigma is required with features")?;
                let sim = cosine_kernel(&feats.vectors, sigma)?;
                (
                    feats.labels,
                    Box::new(DiverseSummarization::new(sim, *lambda)?),
                )
            }
            (None, Some(path)) => {
                let sim = ingest_similarity(path)?;
                (
                    numbered(sim.len()),
                    Box::new(DiverseSummarization::new(sim, *lambda)?),
                )
            }
            (None, None) => bail!("diverse objective needs features or similarity"),
        },
    };
    let meta = match &cfg.metadata {
        Some(path) => {
            let rows = ingest_metadata(path)?;
            let aligned =
                align(&rows, &labels).with_context(|| format!("aligning {}", path.display()))?;
            Some(aligned.into_iter().cloned().collect())
        }
        None => None,
    };
    Ok(Loaded {
        labels,
        objective,
        meta,
    })
}

/// One point of the outer sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub t: Option<u32>,
    pub budget: Option<f64>,
}

impl Point {
    /// `key=value` prefix for the report's params column.
    pub fn label(&self) -> Option<String> {
        match (self.t, self.budget) {
            (Some(t), _) => Some(format!("t={t}")),
            (None, Some(b)) => Some(format!("budget={b}")),
            (None, None) => None,
        }
    }
}

pub fn points(cfg: &ExperimentConfig) -> Vec<Point> {
    match &cfg.sweep {
        None => vec![Point {
            t: None,
            budget: None,
        }],
        Some(SweepSpec::T(range)) => range
            .values()
            .into_iter()
            .map(|t| Point {
                t: Some(t),
                budget: None,
            })
            .collect(),
        Some(SweepSpec::RatingBudget(bs)) => bs
            .iter()
            .map(|&b| Point {
                t: None,
                budget: Some(b),
            })
            .collect(),
    }
}

pub struct Problem<'a> {
    pub objective: &'a dyn Objective<f64>,
    pub system: Box<dyn IndependenceSystem>,
    /// `system` intersected with the knapsacks, for algorithms without a
    /// density gate.
    pub folded: Box<dyn IndependenceSystem>,
    pub knapsacks: KnapsackSet,
    pub ground: ElementSet,
}

impl Problem<'_> {
    pub fn declared(&self) -> Declared {
        self.system.declared()
    }
}

pub fn build<'a>(cfg: &ExperimentConfig, loaded: &'a Loaded, point: &Point) -> Result<Problem<'a>> {
    let n = loaded.n();
    let system = build_system(cfg, loaded, point)?;
    let knapsacks = build_knapsacks(cfg, loaded, point)?;
    let folded: Box<dyn IndependenceSystem> = if knapsacks.m() == 0 {
        build_system(cfg, loaded, point)?
    } else {
        Box::new(build_intersection(vec![
            build_system(cfg, loaded, point)?,
            Box::new(KnapsackSystem::new(knapsacks.clone())),
        ])?)
    };
    let (ground, _) = admissible_ground(&ElementSet::from_ids(0..n), system.as_ref(), &knapsacks);
    Ok(Problem {
        objective: loaded.objective.as_ref(),
        system,
        folded,
        knapsacks,
        ground,
    })
}

fn meta<'a>(loaded: &'a Loaded, what: &str) -> Result<&'a [MetaRow]> {
    loaded
        .meta
        .as_deref()
        .with_context(|| format!("{what} needs metadata"))
}

fn build_system(
    cfg: &ExperimentConfig,
    loaded: &Loaded,
    point: &Point,
) -> Result<Box<dyn IndependenceSystem>> {
    let n = loaded.n();
    let mut parts: Vec<Box<dyn IndependenceSystem>> = Vec::new();
    for part in &cfg.constraint.parts {
        let sys: Box<dyn IndependenceSystem> = match part {
            PartSpec::Cardinality { limit } => Box::new(build_cardinality(n, *limit)),
            PartSpec::Genre {
                t,
                fractions,
                limits,
            } => {
                let rows = meta(loaded, "genre")?;
                let groups: Vec<Vec<String>> = rows.iter().map(|r| r.genres.clone()).collect();
                let limits = match limits {
                    Some(l) => l.clone(),
                    None => {
                        let t = point
                            .t
                            .or(*t)
                            .context("genre part needs t, either in the part or the sweep")?;
                        genre_limits(&groups, fractions, t)?
                    }
                };
                Box::new(build_partition_limit(&groups, &limits)?)
            }
            PartSpec::ReleaseYear { gap } => {
                let years = meta(loaded, "release_year")?
                    .iter()
                    .map(|r| {
                        r.year
                            .with_context(|| format!("element {:?} has no year", r.id))
                    })
                    .collect::<Result<Vec<i64>>>()?;
                Box::new(build_interval_separation(years, *gap))
            }
            PartSpec::Interval { keys, gap } => {
                ensure!(
                    keys.len() == n,
                    "interval has {} keys for {n} elements",
                    keys.len()
                );
                Box::new(build_interval_separation(keys.clone(), *gap))
            }
            PartSpec::Partition { groups, limits } => {
                ensure!(
                    groups.len() == n,
                    "partition has {} group lists for {n} elements",
                    groups.len()
                );
                Box::new(build_partition_limit(groups, limits)?)
            }
            PartSpec::Hardness { k, h, m } => {
                let sys = build_hardness_m(*k, *h, *m)?;
                ensure!(
                    sys.ground_size() == n,
                    "hardness system has {} elements, objective has {n}",
                    sys.ground_size()
                );
                Box::new(sys)
            }
        };
        parts.push(sys);
    }
    let combined: Box<dyn IndependenceSystem> = if parts.len() == 1 {
        parts.pop().expect("one part")
    } else {
        Box::new(build_intersection(parts)?)
    };
    Ok(match cfg.constraint.declared {
        Some(d) => {
            let declared = match d.class {
                ClassSpec::KSystem => Declared::system(d.k),
                ClassSpec::KExtendible => Declared::extendible(d.k),
            };
            Box::new(Redeclared::new(combined, declared))
        }
        None => combined,
    })
}

/// `d_g = Round(t * q_g)`, with `q_g` from `fractions` or else the share of
/// elements carrying `g`.
pub fn genre_limits(
    groups: &[Vec<String>],
    fractions: &BTreeMap<String, f64>,
    t: u32,
) -> Result<BTreeMap<String, u32>> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for g in groups.iter().flatten() {
        *counts.entry(g.clone()).or_default() += 1;
    }
    for (g, q) in fractions {
        ensure!(
            (0.0..=1.0).contains(q),
            "fraction for {g:?} is {q}, outside [0, 1]"
        );
        if !counts.contains_key(g) {
            log::warn!("fraction given for genre {g:?}, which no element carries");
        }
    }
    let n = groups.len().max(1) as f64;
    Ok(counts
        .into_iter()
        .map(|(g, c)| {
            let q = fractions.get(&g).copied().unwrap_or(c as f64 / n);
            let d = (f64::from(t) * q).round() as u32;
            (g, d)
        })
        .collect())
}

fn build_knapsacks(cfg: &ExperimentConfig, loaded: &Loaded, point: &Point) -> Result<KnapsackSet> {
    let n = loaded.n();
    let mut costs = Vec::new();
    let mut budgets = Vec::new();
    for k in &cfg.knapsacks {
        match k {
            KnapsackSpec::RatingBudget { budget } => {
                let c = meta(loaded, "rating_budget")?
                    .iter()
                    .map(|r| {
                        r.rating
                            .map(rating_cost)
                            .with_context(|| format!("element {:?} has no rating", r.id))
                    })
                    .collect::<Result<Vec<f64>>>()?;
                costs.push(c);
                budgets.push(point.budget.unwrap_or(*budget));
            }
            KnapsackSpec::Costs { costs: c, budget } => {
                ensure!(
                    c.len() == n,
                    "knapsack has {} costs for {n} elements",
                    c.len()
                );
                costs.push(c.clone());
                budgets.push(*budget);
            }
        }
    }
    Ok(KnapsackSet::new(n, costs, &budgets)?)
}
