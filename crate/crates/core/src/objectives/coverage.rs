use crate::error::{invalid, Result};
use crate::objectives::Objective;
use crate::scalar::Scalar;
use crate::set::ElementId;

/// Weighted coverage: `f(S)` is the total weight of universe items covered by
/// the union of the sets chosen in `S`. Monotone and submodular.
#[derive(Debug, Clone)]
pub struct Coverage<T> {
    sets: Vec<Vec<usize>>,
    weights: Vec<T>,
}

impl<T: Scalar> Coverage<T> {
    /// `sets[u]` lists the universe items covered by element `u`; `weights[a]`
    /// is the weight of item `a`.
    pub fn new(sets: Vec<Vec<usize>>, weights: Vec<T>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| !(**w >= T::zero())) {
            return Err(invalid("weights", format!("must be non-negative, got {w}")));
        }
        let mut sets = sets;
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
            if let Some(&a) = s.iter().find(|&&a| a >= weights.len()) {
                return Err(invalid(
                    "sets",
                    format!("item {a} outside universe of size {}", weights.len()),
                ));
            }
        }
        Ok(Self { sets, weights })
    }
}

impl<T: Scalar> Objective<T> for Coverage<T> {
    fn ground_size(&self) -> usize {
        self.sets.len()
    }

    fn evaluate(&self, set: &[ElementId]) -> T {
        let mut covered = vec![false; self.weights.len()];
        let mut total = T::zero();
        for &u in set {
            for &a in &self.sets[u] {
                if !covered[a] {
                    covered[a] = true;
                    total = total + self.weights[a];
                }
            }
        }
        total
    }

    fn init_cache(&self) -> Vec<T> {
        vec![T::zero(); self.weights.len()]
    }

    fn value_with(&self, _set: &[ElementId], value: T, cache: &[T], u: ElementId) -> T {
        value
            + self.sets[u]
                .iter()
                .filter(|&&a| cache[a] == T::zero())
                .map(|&a| self.weights[a])
                .sum::<T>()
    }

    fn absorb(&self, cache: &mut Vec<T>, u: ElementId) {
        for &a in &self.sets[u] {
            cache[a] = T::one();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::testing::assert_incremental_matches;

    #[test]
    fn disjoint_unit_sets_count_elements() {
        let f = Coverage::new(vec![vec![0], vec![1], vec![2]], vec![1.0; 3]).unwrap();
        assert_eq!(f.evaluate(&[0, 2]), 2.0);
        assert_eq!(f.evaluate(&[0, 1, 2]), 3.0);
    }

    #[test]
    fn identical_sets_saturate() {
        let f = Coverage::new(vec![vec![0, 1]; 3], vec![1.0, 2.0]).unwrap();
        assert_eq!(f.evaluate(&[0]), 3.0);
        assert_eq!(f.evaluate(&[0, 1, 2]), 3.0);
    }

    #[test]
    fn weighted_union() {
        let f = Coverage::new(vec![vec![0], vec![0, 1]], vec![2.0, 3.0]).unwrap();
        assert_eq!(f.evaluate(&[0, 1]), 5.0);
        assert_incremental_matches(&f, &[1, 0]);
    }

    #[test]
    fn rejects_bad_items() {
        assert!(Coverage::new(vec![vec![3]], vec![1.0f64]).is_err());
        assert!(Coverage::new(vec![vec![0]], vec![-1.0f64]).is_err());
    }
}
