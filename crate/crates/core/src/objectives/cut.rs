use crate::error::{invalid, Result};
use crate::objectives::Objective;
use crate::scalar::Scalar;
use crate::set::ElementId;

/// Undirected weighted cut function `f(S) = sum of w_ij over i in S, j not in S`.
/// Non-negative, submodular, and not monotone.
#[derive(Debug, Clone)]
pub struct GraphCut<T> {
    n: usize,
    weights: Vec<T>,
    degree: Vec<T>,
}

impl<T: Scalar> GraphCut<T> {
    /// Builds the cut function from a dense symmetric weight matrix in
    /// row-major order. Diagonal entries are ignored.
    pub fn new(n: usize, weights: Vec<T>) -> Result<Self> {
        if weights.len() != n * n {
            return Err(invalid("weights", format!("expected {} entries", n * n)));
        }
        let mut weights = weights;
        for i in 0..n {
            weights[i * n + i] = T::zero();
            for j in 0..i {
                let (a, b) = (weights[i * n + j], weights[j * n + i]);
                if a != b || !(a >= T::zero()) {
                    return Err(invalid(
                        "weights",
                        format!("entry ({i},{j}) must be symmetric and non-negative"),
                    ));
                }
            }
        }
        let degree = (0..n)
            .map(|i| weights[i * n..(i + 1) * n].iter().copied().sum())
            .collect();
        Ok(Self { n, weights, degree })
    }

    /// Unit-weight cut function of the complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let weights = (0..n * n)
            .map(|idx| {
                if idx / n == idx % n {
                    T::zero()
                } else {
                    T::one()
                }
            })
            .collect();
        Self::new(n, weights).expect("complete graph weights are valid")
    }

    fn w(&self, i: usize, j: usize) -> T {
        self.weights[i * self.n + j]
    }
}

impl<T: Scalar> Objective<T> for GraphCut<T> {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn evaluate(&self, set: &[ElementId]) -> T {
        let mut inside = vec![false; self.n];
        for &u in set {
            inside[u] = true;
        }
        let mut total = T::zero();
        for &i in set {
            for j in 0..self.n {
                if !inside[j] {
                    total = total + self.w(i, j);
                }
            }
        }
        total
    }

    fn init_cache(&self) -> Vec<T> {
        vec![T::zero(); self.n]
    }

    // cache[v] holds the total weight between v and the current solution.
    fn value_with(&self, _set: &[ElementId], value: T, cache: &[T], u: ElementId) -> T {
        value + self.degree[u] - (cache[u] + cache[u])
    }

    fn absorb(&self, cache: &mut Vec<T>, u: ElementId) {
        let row = &self.weights[u * self.n..(u + 1) * self.n];
        for (c, &w) in cache.iter_mut().zip(row) {
            *c = *c + w;
        }
    }
}
