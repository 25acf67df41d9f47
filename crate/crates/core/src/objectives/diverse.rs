use crate::error::{invalid, Error, Result};
use crate::objectives::Objective;
use crate::scalar::Scalar;
use crate::set::ElementId;

/// Dense symmetric similarity matrix with entries in `[0, 1]` and cached
/// column sums.
#[derive(Debug, Clone)]
pub struct SimilarityMatrix<T> {
    n: usize,
    entries: Vec<T>,
    column_sums: Vec<T>,
}

impl<T: Scalar> SimilarityMatrix<T> {
    /// Validates a row-major `n x n` matrix: exact symmetry, entries in
    /// `[0, 1]`, and a positive diagonal.
    pub fn new(n: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(invalid(
                "similarity",
                format!("expected {} entries, got {}", n * n, entries.len()),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                let s = entries[i * n + j];
                if !(s >= T::zero() && s <= T::one()) {
                    return Err(invalid(
                        "similarity",
                        format!("entry ({i},{j}) = {s} outside [0, 1]"),
                    ));
                }
                if s != entries[j * n + i] {
                    return Err(invalid(
                        "similarity",
                        format!("entry ({i},{j}) not symmetric"),
                    ));
                }
            }
            if entries[i * n + i] <= T::zero() {
                return Err(invalid(
                    "similarity",
                    format!("diagonal entry {i} must be positive"),
                ));
            }
        }
        let column_sums = (0..n)
            .map(|j| (0..n).map(|i| entries[i * n + j]).sum())
            .collect();
        Ok(Self {
            n,
            entries,
            column_sums,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column_sum(&self, j: usize) -> T {
        self.column_sums[j]
    }
}

/// Gaussian-of-cosine kernel `s_ij = exp(-sigma^2 (1 - cos(v_i, v_j)))`.
pub fn cosine_kernel<T: Scalar>(vectors: &[Vec<T>], sigma: T) -> Result<SimilarityMatrix<T>> {
    if !(sigma > T::zero()) {
        return Err(invalid("sigma", format!("must be positive, got {sigma}")));
    }
    let n = vectors.len();
    let dim = vectors.first().map_or(0, Vec::len);
    let mut norms = Vec::with_capacity(n);
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                index: i,
                expected: dim,
                found: v.len(),
            });
        }
        let norm = v.iter().map(|&x| x * x).sum::<T>().sqrt();
        if !(norm > T::zero()) {
            return Err(Error::ZeroVector(i));
        }
        norms.push(norm);
    }
    let scale = sigma * sigma;
    let mut entries = vec![T::zero(); n * n];
    for i in 0..n {
        entries[i * n + i] = T::one();
        for j in 0..i {
            let dot = vectors[i]
                .iter()
                .zip(&vectors[j])
                .map(|(&a, &b)| a * b)
                .sum::<T>();
            let cos = (dot / (norms[i] * norms[j])).max(-T::one()).min(T::one());
            let s = (-scale * (T::one() - cos)).exp();
            entries[i * n + j] = s;
            entries[j * n + i] = s;
        }
    }
    SimilarityMatrix::new(n, entries)
}

/// Diverse summarization objective
/// `f(S) = (1/n) [ sum_{i in N} sum_{j in S} s_ij - lambda sum_{i,j in S} s_ij ]`.
///
/// Submodular for any `lambda >= 0`; non-monotone once `lambda > 0`. With
/// `lambda <= 1` every value is non-negative, which the counting wrapper still
/// checks at query time.
#[derive(Debug, Clone)]
pub struct DiverseSummarization<T> {
    sim: SimilarityMatrix<T>,
    lambda: T,
    inv_n: T,
}

impl<T: Scalar> DiverseSummarization<T> {
    pub fn new(sim: SimilarityMatrix<T>, lambda: T) -> Result<Self> {
        if !(lambda >= T::zero() && lambda <= T::one()) {
            return Err(invalid(
                "lambda",
                format!("must lie in [0, 1], got {lambda}"),
            ));
        }
        let inv_n = if sim.is_empty() {
            T::zero()
        } else {
            T::one() / T::count(sim.len())
        };
        Ok(Self { sim, lambda, inv_n })
    }

    pub fn similarity(&self) -> &SimilarityMatrix<T> {
        &self.sim
    }
}

impl<T: Scalar> Objective<T> for DiverseSummarization<T> {
    fn ground_size(&self) -> usize {
        self.sim.len()
    }

    fn evaluate(&self, set: &[ElementId]) -> T {
        let coverage: T = set.iter().map(|&j| self.sim.column_sum(j)).sum();
        let penalty: T = set
            .iter()
            .map(|&i| set.iter().map(|&j| self.sim.get(i, j)).sum::<T>())
            .sum();
        self.inv_n * (coverage - self.lambda * penalty)
    }

    fn init_cache(&self) -> Vec<T> {
        vec![T::zero(); self.sim.len()]
    }

    // cache[v] holds sum_{i in S} s_iv.
    fn value_with(&self, _set: &[ElementId], value: T, cache: &[T], u: ElementId) -> T {
        let self_and_cross = self.sim.get(u, u) + cache[u] + cache[u];
        value + self.inv_n * (self.sim.column_sum(u) - self.lambda * self_and_cross)
    }

    fn absorb(&self, cache: &mut Vec<T>, u: ElementId) {
        for (c, &s) in cache.iter_mut().zip(self.sim.row(u)) {
            *c = *c + s;
        }
    }
}
