//! Ground sets and sorted element sets.

use std::fmt;

use crate::error::{Error, Result};

/// Element identifier. Ids are dense integers `0..n`.
pub type ElementId = usize;

/// A ground set of `n` elements with ids `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Every element of the ground set, as an [`ElementSet`].
    pub fn all(&self) -> ElementSet {
        ElementSet {
            members: (0..self.n).collect(),
        }
    }

    pub fn check(&self, id: ElementId) -> Result<()> {
        if id < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { id, n: self.n })
        }
    }
}

/// A set of element ids kept sorted ascending without duplicates.
///
/// Iteration order is ascending id, which every algorithm relies on for
/// deterministic tie-breaking.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<ElementId>,
}

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from arbitrary ids, sorting and removing duplicates.
    pub fn from_ids<I: IntoIterator<Item = ElementId>>(ids: I) -> Self {
        let mut members: Vec<_> = ids.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    /// Builds a set from `0..n` bit positions of `mask` mapped through `universe`.
    pub fn from_mask(universe: &[ElementId], mask: u64) -> Self {
        Self::from_ids(
            universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &u)| u),
        )
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    /// Inserts `id`, returning false if it was already present.
    pub fn insert(&mut self, id: ElementId) -> bool {
        match self.members.binary_search(&id) {
            Ok(_) => false,
            Err(pos) => {
                self.members.insert(pos, id);
                true
            }
        }
    }

    /// Removes `id`, returning false if it was absent.
    pub fn remove(&mut self, id: ElementId) -> bool {
        match self.members.binary_search(&id) {
            Ok(pos) => {
                self.members.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// `S + u`.
    pub fn with(&self, id: ElementId) -> Self {
        let mut out = self.clone();
        out.insert(id);
        out
    }

    /// `S - u`.
    pub fn without(&self, id: ElementId) -> Self {
        let mut out = self.clone();
        out.remove(id);
        out
    }

    pub fn difference(&self, other: &ElementSet) -> Self {
        Self {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&u| !other.contains(u))
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&u| other.contains(u))
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&u| !other.contains(u))
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.members
    }

    pub fn max_id(&self) -> Option<ElementId> {
        self.members.last().copied()
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        Self::from_ids(iter)
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = ElementId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, ElementId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, u) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ground_set_bounds() {
        let n = GroundSet::new(3);
        assert!(n.check(2).is_ok());
        assert_eq!(n.check(3), Err(Error::ElementOutOfRange { id: 3, n: 3 }));
        assert_eq!(n.all().as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn display_and_mask() {
        let s = ElementSet::from_mask(&[4, 7, 9], 0b101);
        assert_eq!(s.to_string(), "{4,9}");
    }

    proptest! {
        #[test]
        fn stays_sorted_and_unique(ids in proptest::collection::vec(0usize..50, 0..40)) {
            let mut s = ElementSet::new();
            for &u in &ids {
                s.insert(u);
            }
            let w = s.as_slice();
            prop_assert!(w.windows(2).all(|p| p[0] < p[1]));
            prop_assert_eq!(s, ElementSet::from_ids(ids));
        }
    }
}
