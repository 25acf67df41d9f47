use std::collections::BTreeMap;

use crate::constraints::{Declared, IndependenceSystem};
use crate::error::{Error, Result};
use crate::set::ElementId;

/// Group-limit constraint: each element carries a set of labels, and a set is
/// independent iff for every label `g` it holds at most `d_g` elements
/// carrying `g`.
///
/// Each label is a matroid constraint, so the system is t-extendible where
/// t is the largest number of labels on any single element.
#[derive(Debug, Clone)]
pub struct PartitionLimit {
    labels: Vec<String>,
    groups: Vec<Vec<usize>>,
    limits: Vec<u32>,
    k: usize,
}

/// Builds a group-limit constraint. `groups[u]` lists the labels of element
/// `u`; every label must have an entry in `limits`.
pub fn build_partition_limit(
    groups: &[Vec<String>],
    limits: &BTreeMap<String, u32>,
) -> Result<PartitionLimit> {
    let labels: Vec<String> = limits.keys().cloned().collect();
    let index: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut mapped = Vec::with_capacity(groups.len());
    for g in groups {
        let mut ids = Vec::with_capacity(g.len());
        for label in g {
            let &i = index
                .get(label.as_str())
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            ids.push(i);
        }
        ids.sort_unstable();
        ids.dedup();
        mapped.push(ids);
    }
    let k = mapped.iter().map(Vec::len).max().unwrap_or(0).max(1);
    Ok(PartitionLimit {
        limits: labels.iter().map(|l| limits[l]).collect(),
        labels,
        groups: mapped,
        k,
    })
}

impl PartitionLimit {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

impl IndependenceSystem for PartitionLimit {
    fn ground_size(&self) -> usize {
        self.groups.len()
    }

    fn declared(&self) -> Declared {
        Declared::extendible(self.k)
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        let mut counts = vec![0u32; self.limits.len()];
        for &u in set {
            for &g in &self.groups[u] {
                counts[g] += 1;
                if counts[g] > self.limits[g] {
                    return false;
                }
            }
        }
        true
    }

    fn tally_len(&self) -> usize {
        self.limits.len()
    }

    fn record(&self, tally: &mut [u32], u: ElementId) {
        for &g in &self.groups[u] {
            tally[g] += 1;
        }
    }

    fn can_add(&self, _set: &[ElementId], tally: &[u32], u: ElementId) -> bool {
        self.groups[u].iter().all(|&g| tally[g] < self.limits[g])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::testing::assert_down_closed;

    fn labels(spec: &[&[&str]]) -> Vec<Vec<String>> {
        spec.iter()
            .map(|g| g.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn single_label_is_cardinality() {
        let limits = BTreeMap::from([("a".to_string(), 1)]);
        let sys = build_partition_limit(&labels(&[&["a"], &["a"], &["a"]]), &limits).unwrap();
        assert_eq!(sys.declared(), Declared::extendible(1));
        assert!(sys.is_independent(&[2]));
        assert!(!sys.is_independent(&[0, 2]));
    }

    #[test]
    fn zero_limit_forbids_singleton() {
        let limits = BTreeMap::from([("a".to_string(), 1), ("b".to_string(), 0)]);
        let sys = build_partition_limit(&labels(&[&["a", "b"], &["a"]]), &limits).unwrap();
        assert!(!sys.can_add(&[], &[0, 0], 0));
        assert!(sys.can_add(&[], &[0, 0], 1));
        assert_eq!(sys.declared().k, 2);
    }

    #[test]
    fn unknown_label() {
        let limits = BTreeMap::from([("a".to_string(), 1)]);
        assert_eq!(
            build_partition_limit(&labels(&[&["zz"]]), &limits).unwrap_err(),
            Error::UnknownLabel("zz".into())
        );
    }

    #[test]
    fn overlapping_groups_down_closed() {
        let limits = BTreeMap::from([
            ("x".to_string(), 2),
            ("y".to_string(), 1),
            ("z".to_string(), 3),
        ]);
        let sys = build_partition_limit(
            &labels(&[
                &["x"],
                &["x", "y"],
                &["y", "z"],
                &["z"],
                &["x", "z"],
                &["y"],
                &["z"],
            ]),
            &limits,
        )
        .unwrap();
        assert_down_closed(&sys, 7, 30);
    }
}
