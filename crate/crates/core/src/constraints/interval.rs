use crate::constraints::{Declared, IndependenceSystem};
use crate::set::ElementId;

/// Separation constraint on integer keys: `S` is independent iff every two
/// distinct members have keys at least `gap` apart. With `gap = 1` this says
/// no two members share a key (e.g. a release year).
///
/// Declared 2-extendible: a new element conflicts with at most one member
/// below and one member above its key.
#[derive(Debug, Clone)]
pub struct IntervalSeparation {
    keys: Vec<i64>,
    gap: i64,
}

pub fn build_interval_separation(keys: Vec<i64>, gap: i64) -> IntervalSeparation {
    IntervalSeparation { keys, gap }
}

impl IntervalSeparation {
    fn apart(&self, a: ElementId, b: ElementId) -> bool {
        (self.keys[a] - self.keys[b]).abs() >= self.gap
    }
}

impl IndependenceSystem for IntervalSeparation {
    fn ground_size(&self) -> usize {
        self.keys.len()
    }

    fn declared(&self) -> Declared {
        Declared::extendible(2)
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        let mut keys: Vec<i64> = set.iter().map(|&u| self.keys[u]).collect();
        keys.sort_unstable();
        keys.windows(2).all(|w| w[1] - w[0] >= self.gap)
    }

    fn can_add(&self, set: &[ElementId], _tally: &[u32], u: ElementId) -> bool {
        set.iter().all(|&e| self.apart(e, u))
    }
}
