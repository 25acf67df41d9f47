//! Seeded random instances for tests and the ratio harness.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constraints::{
    admissible_ground, build_cardinality, build_hardness_m, build_intersection,
    build_interval_separation, build_partition_limit, IndependenceSystem, KnapsackSet,
};
use crate::error::{invalid, Error, Result};
use crate::objectives::{cosine_kernel, Coverage, DiverseSummarization, GraphCut, Objective};
use crate::scalar::Scalar;
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectiveKind {
    /// Weighted coverage; monotone.
    Coverage,
    /// Random weighted graph cut; non-monotone.
    GraphCut,
    /// Diverse summarization with `λ = 1` over random feature vectors.
    Diverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    Cardinality,
    /// Intersection of `k` random partition matroids; k-extendible.
    PartitionIntersection {
        k: usize,
    },
    /// Random integer keys with gap 1; 2-extendible.
    Interval,
    /// `M(k, h, m)` sized to fit the requested `n`; k-extendible.
    HardnessM {
        k: usize,
    },
}

/// Objective, constraint and knapsack count of a random instance.
///
/// Written `objective:constraint[:knapsacks-m]`, for example
/// `graphcut:partition-2:knapsacks-1` or `coverage:hardness-2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InstanceKind {
    pub objective: ObjectiveKind,
    pub constraint: ConstraintKind,
    pub knapsacks: usize,
}

impl InstanceKind {
    pub fn new(objective: ObjectiveKind, constraint: ConstraintKind, knapsacks: usize) -> Self {
        Self {
            objective,
            constraint,
            knapsacks,
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectiveKind::Coverage => "coverage",
            ObjectiveKind::GraphCut => "graphcut",
            ObjectiveKind::Diverse => "diverse",
        })
    }
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintKind::Cardinality => f.write_str("cardinality"),
            ConstraintKind::PartitionIntersection { k } => write!(f, "partition-{k}"),
            ConstraintKind::Interval => f.write_str("interval"),
            ConstraintKind::HardnessM { k } => write!(f, "hardness-{k}"),
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.objective, self.constraint)?;
        if self.knapsacks > 0 {
            write!(f, ":knapsacks-{}", self.knapsacks)?;
        }
        Ok(())
    }
}

fn suffix_number(s: &str, prefix: &str, whole: &str) -> Result<usize> {
    s.strip_prefix(prefix)
        .and_then(|r| r.parse().ok())
        .ok_or_else(|| Error::UnknownKind(whole.to_string()))
}

impl FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownKind(s.to_string());
        let mut parts = s.split(':');
        let objective = match parts.next().ok_or_else(unknown)? {
            "coverage" => ObjectiveKind::Coverage,
            "graphcut" => ObjectiveKind::GraphCut,
            "diverse" => ObjectiveKind::Diverse,
            _ => return Err(unknown()),
        };
        let constraint = match parts.next().ok_or_else(unknown)? {
            "cardinality" => ConstraintKind::Cardinality,
            "interval" => ConstraintKind::Interval,
            c if c.starts_with("partition-") => ConstraintKind::PartitionIntersection {
                k: suffix_number(c, "partition-", s)?,
            },
            c if c.starts_with("hardness-") => ConstraintKind::HardnessM {
                k: suffix_number(c, "hardness-", s)?,
            },
            _ => return Err(unknown()),
        };
        let knapsacks = match parts.next() {
            None => 0,
            Some(p) => suffix_number(p, "knapsacks-", s)?,
        };
        if parts.next().is_some() {
            return Err(unknown());
        }
        Ok(Self::new(objective, constraint, knapsacks))
    }
}

/// A generated problem: objective, independence system, knapsacks and the
/// admissible ground set.
pub struct Instance<T> {
    pub label: String,
    pub kind: InstanceKind,
    pub objective: Box<dyn Objective<T>>,
    pub system: Box<dyn IndependenceSystem>,
    pub knapsacks: KnapsackSet<T>,
    pub ground: ElementSet,
    pub monotone: bool,
}

impl<T> fmt::Debug for Instance<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Instance")
            .field("label", &self.label)
            .field("ground", &self.ground)
            .field("declared", &self.system.declared())
            .finish()
    }
}

fn hardness_shape(k: usize, n: usize) -> Result<(usize, usize, usize)> {
    // Smallest h = 2k, then as many copies of m as fit.
    let h = 2 * k;
    let m = n / (h * k);
    if k == 0 || m == 0 {
        return Err(invalid(
            "n",
            format!(
                "hardness-{k} needs at least {} elements, got {n}",
                2 * k * k
            ),
        ));
    }
    Ok((k, h, m))
}

fn random_partition(
    rng: &mut ChaCha8Rng,
    n: usize,
    tag: usize,
) -> Result<Box<dyn IndependenceSystem>> {
    let groups_n = rng.gen_range(2..=3);
    let groups: Vec<Vec<String>> = (0..n)
        .map(|_| vec![format!("p{tag}g{}", rng.gen_range(0..groups_n))])
        .collect();
    let limits: BTreeMap<String, u32> = (0..groups_n)
        .map(|g| (format!("p{tag}g{g}"), rng.gen_range(1..=2)))
        .collect();
    Ok(Box::new(build_partition_limit(&groups, &limits)?))
}

/// Deterministic random instance on (up to) `n` elements.
///
/// `HardnessM` rounds `n` down to the nearest `h*k*m`.
pub fn random_instance<T: Scalar>(seed: u64, n: usize, kind: InstanceKind) -> Result<Instance<T>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let (system, n): (Box<dyn IndependenceSystem>, usize) = match kind.constraint {
        ConstraintKind::Cardinality => {
            let limit = rng.gen_range(1..=(n / 2).max(1));
            (Box::new(build_cardinality(n, limit)), n)
        }
        ConstraintKind::PartitionIntersection { k } => {
            if k == 0 {
                return Err(invalid("k", "must be positive"));
            }
            let parts = (0..k)
                .map(|t| random_partition(&mut rng, n, t))
                .collect::<Result<Vec<_>>>()?;
            (Box::new(build_intersection(parts)?), n)
        }
        ConstraintKind::Interval => {
            let span = (n as i64 * 2 / 3).max(1);
            let keys = (0..n).map(|_| rng.gen_range(0..span)).collect();
            (Box::new(build_interval_separation(keys, 1)), n)
        }
        ConstraintKind::HardnessM { k } => {
            let (k, h, m) = hardness_shape(k, n)?;
            (Box::new(build_hardness_m(k, h, m)?), h * k * m)
        }
    };

    let objective: Box<dyn Objective<T>> = match kind.objective {
        ObjectiveKind::Coverage => {
            let universe = n + 4;
            let sets = (0..n)
                .map(|_| {
                    let mut s: Vec<usize> = (0..universe).filter(|_| rng.gen_bool(0.25)).collect();
                    if s.is_empty() {
                        s.push(rng.gen_range(0..universe));
                    }
                    s
                })
                .collect();
            let weights = (0..universe)
                .map(|_| T::lit(rng.gen_range(0.5..2.0)))
                .collect();
            Box::new(Coverage::new(sets, weights)?)
        }
        ObjectiveKind::GraphCut => {
            let mut w = vec![T::zero(); n * n];
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.6) {
                        let x = T::lit(rng.gen_range(0.1..1.0));
                        w[i * n + j] = x;
                        w[j * n + i] = x;
                    }
                }
            }
            Box::new(GraphCut::new(n, w)?)
        }
        ObjectiveKind::Diverse => {
            let vectors: Vec<Vec<T>> = (0..n)
                .map(|_| {
                    (0..3)
                        .map(|_| {
                            T::lit(
                                rng.gen_range(0.05..1.0)
                                    * if rng.gen_bool(0.3) { -1.0 } else { 1.0 },
                            )
                        })
                        .collect()
                })
                .collect();
            let sigma = T::lit(rng.gen_range(0.5..2.0));
            Box::new(DiverseSummarization::new(
                cosine_kernel(&vectors, sigma)?,
                T::one(),
            )?)
        }
    };

    let knapsacks = if kind.knapsacks == 0 {
        KnapsackSet::none(n)
    } else {
        let costs = (0..kind.knapsacks)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.15) {
                            T::zero()
                        } else {
                            T::lit(rng.gen_range(0.05..0.6))
                        }
                    })
                    .collect()
            })
            .collect();
        KnapsackSet::unit(n, costs)?
    };

    let (ground, _) = admissible_ground(&ElementSet::from_ids(0..n), system.as_ref(), &knapsacks);
    Ok(Instance {
        label: format!("{kind}#{seed}"),
        kind,
        monotone: kind.objective == ObjectiveKind::Coverage,
        objective,
        system,
        knapsacks,
        ground,
    })
}
