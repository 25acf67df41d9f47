//! The JSON experiment configuration. The schema is documented in
//! `docs/config.md` at the repository root.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// Free text, ignored.
    #[serde(default)]
    pub note: Option<String>,
    pub objective: ObjectiveSpec,
    /// CSV with columns `id, genres, year, rating`.
    #[serde(default)]
    pub metadata: Option<PathBuf>,
    pub constraint: ConstraintSpec,
    #[serde(default)]
    pub knapsacks: Vec<KnapsackSpec>,
    #[serde(default)]
    pub sweep: Option<SweepSpec>,
    pub algorithms: Vec<AlgorithmSpec>,
    /// Report path; stdout when absent.
    #[serde(default)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectiveSpec {
    Modular {
        weights: Vec<f64>,
        #[serde(default)]
        bias: f64,
    },
    Coverage {
        sets: Vec<Vec<usize>>,
        weights: Vec<f64>,
    },
    /// Symmetric weight matrix; the cut of `S` is the weight leaving it.
    GraphCut { weights: Vec<Vec<f64>> },
    /// Exactly one of `features` or `similarity`. `sigma` is required with
    /// `features` and has no default.
    Diverse {
        lambda: f64,
        #[serde(default)]
        sigma: Option<f64>,
        #[serde(default)]
        features: Option<PathBuf>,
        #[serde(default)]
        similarity: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintSpec {
    pub parts: Vec<PartSpec>,
    /// Overrides the class and k derived from the parts.
    #[serde(default)]
    pub declared: Option<DeclaredSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PartSpec {
    Cardinality {
        limit: usize,
    },
    /// Genre limits from metadata. Either fixed `limits`, or
    /// `d_g = Round(t * q_g)` where `q_g` comes from `fractions` and falls
    /// back to the share of elements carrying genre `g`.
    Genre {
        #[serde(default)]
        t: Option<u32>,
        #[serde(default)]
        fractions: BTreeMap<String, f64>,
        #[serde(default)]
        limits: Option<BTreeMap<String, u32>>,
    },
    /// Pairwise release-year separation from metadata.
    ReleaseYear {
        #[serde(default = "one")]
        gap: i64,
    },
    Interval {
        keys: Vec<i64>,
        #[serde(default = "one")]
        gap: i64,
    },
    Partition {
        groups: Vec<Vec<String>>,
        limits: BTreeMap<String, u32>,
    },
    Hardness {
        k: usize,
        h: usize,
        m: usize,
    },
}

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeclaredSpec {
    pub class: ClassSpec,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassSpec {
    KSystem,
    KExtendible,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum KnapsackSpec {
    /// Costs `max(rating - 5, 0)` from metadata, divided by `budget`.
    RatingBudget { budget: f64 },
    Costs {
        costs: Vec<f64>,
        #[serde(default = "unit")]
        budget: f64,
    },
}

fn unit() -> f64 {
    1.0
}

/// One axis swept in the outer loop of `run`.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SweepSpec {
    /// Replaces `t` in every genre part.
    T(IntRange),
    /// Replaces the budget of every rating knapsack.
    RatingBudget(Vec<f64>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum IntRange {
    List(Vec<u32>),
    Span { from: u32, to: u32 },
}

impl IntRange {
    pub fn values(&self) -> Vec<u32> {
        match self {
            IntRange::List(v) => v.clone(),
            IntRange::Span { from, to } => (*from..=*to).collect(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: Clone> OneOrMany<T> {
    pub fn values(&self) -> Vec<T> {
        match self {
            OneOrMany::One(x) => vec![x.clone()],
            OneOrMany::Many(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmName {
    Greedy,
    SampleGreedy,
    SimultaneousGreedys,
    FastSgs,
    KnapsackSgs,
    DensitySearchSgs,
    RepeatedGreedy,
    ModifiedRepeatedGreedy,
    DensitySearchRg,
}

impl AlgorithmName {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgorithmName::Greedy => "greedy",
            AlgorithmName::SampleGreedy => "sample_greedy",
            AlgorithmName::SimultaneousGreedys => "simultaneous_greedys",
            AlgorithmName::FastSgs => "fast_sgs",
            AlgorithmName::KnapsackSgs => "knapsack_sgs",
            AlgorithmName::DensitySearchSgs => "density_search_sgs",
            AlgorithmName::RepeatedGreedy => "repeated_greedy",
            AlgorithmName::ModifiedRepeatedGreedy => "modified_repeated_greedy",
            AlgorithmName::DensitySearchRg => "density_search_rg",
        }
    }
}

/// An algorithm and its parameter grid. List-valued parameters expand into
/// one run per combination; omitted ones take the analysis defaults.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmSpec {
    pub name: AlgorithmName,
    #[serde(default)]
    pub ell: Option<OneOrMany<usize>>,
    #[serde(default)]
    pub eps: Option<OneOrMany<f64>>,
    #[serde(default)]
    pub delta: Option<OneOrMany<f64>>,
    #[serde(default)]
    pub rho: Option<OneOrMany<f64>>,
    #[serde(default)]
    pub beta: Option<OneOrMany<f64>>,
    #[serde(default)]
    pub seed: Option<OneOrMany<u64>>,
    #[serde(default)]
    pub alpha: Option<f64>,
    /// Use the monotone parameter rules for defaults.
    #[serde(default)]
    pub monotone: bool,
    /// After the per-ℓ rows, add one row holding the best of them.
    #[serde(default)]
    pub max_over_ell: bool,
}

impl ExperimentConfig {
    /// Reads a config and resolves its relative paths against the config's
    /// directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let mut cfg: ExperimentConfig = serde_json::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new(""));
        cfg.resolve(base);
        cfg.validate()?;
        Ok(cfg)
    }

    fn resolve(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        if let ObjectiveSpec::Diverse {
            features,
            similarity,
            ..
        } = &mut self.objective
        {
            features.iter_mut().for_each(fix);
            similarity.iter_mut().for_each(fix);
        }
        self.metadata.iter_mut().for_each(fix);
        self.output.iter_mut().for_each(fix);
    }

    pub fn validate(&self) -> Result<()> {
        if let ObjectiveSpec::Diverse {
            sigma,
            features,
            similarity,
            ..
        } = &self.objective
        {
            match (features, similarity) {
                (Some(_), Some(_)) | (None, None) => {
                    bail!("diverse objective needs exactly one of features or similarity")
                }
                (Some(_), None) if sigma.is_none() => {
                    bail!("sigma is required with features and has no default")
                }
                _ => {}
            }
        }
        if self.constraint.parts.is_empty() {
            bail!("constraint needs at least one part");
        }
        if self.algorithms.is_empty() {
            bail!("no algorithms listed");
        }
        let needs_metadata = self
            .constraint
            .parts
            .iter()
            .any(|p| matches!(p, PartSpec::Genre { .. } | PartSpec::ReleaseYear { .. }))
            || self
                .knapsacks
                .iter()
                .any(|k| matches!(k, KnapsackSpec::RatingBudget { .. }));
        if needs_metadata && self.metadata.is_none() {
            bail!("genre, release_year and rating_budget need a metadata file");
        }
        match &self.sweep {
            Some(SweepSpec::T(_))
                if !self
                    .constraint
                    .parts
                    .iter()
                    .any(|p| matches!(p, PartSpec::Genre { .. })) =>
            {
                bail!("a t sweep needs a genre part")
            }
            Some(SweepSpec::RatingBudget(_))
                if !self
                    .knapsacks
                    .iter()
                    .any(|k| matches!(k, KnapsackSpec::RatingBudget { .. })) =>
            {
                bail!("a rating_budget sweep needs a rating_budget knapsack")
            }
            _ => {}
        }
        for a in &self.algorithms {
            if a.max_over_ell && a.name != AlgorithmName::SimultaneousGreedys {
                bail!("max_over_ell applies to simultaneous_greedys only");
            }
        }
        Ok(())
    }
}
