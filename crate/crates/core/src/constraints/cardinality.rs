use crate::constraints::{Declared, IndependenceSystem};
use crate::set::ElementId;

/// Uniform matroid: `S` is independent iff `|S| <= limit`.
#[derive(Debug, Clone)]
pub struct Cardinality {
    n: usize,
    limit: usize,
}

/// Uniform matroid of rank `limit` over `n` elements.
pub fn build_cardinality(n: usize, limit: usize) -> Cardinality {
    Cardinality { n, limit }
}

impl Cardinality {
    pub fn limit(&self) -> usize {
        self.limit
    }
}

impl IndependenceSystem for Cardinality {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn declared(&self) -> Declared {
        Declared::extendible(1)
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        set.len() <= self.limit
    }

    fn can_add(&self, set: &[ElementId], _tally: &[u32], _u: ElementId) -> bool {
        set.len() < self.limit
    }
}
