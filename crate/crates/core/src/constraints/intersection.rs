use crate::constraints::{Declared, IndependenceSystem, SystemClass};
use crate::error::{invalid, Error, Result};
use crate::set::ElementId;

/// Intersection of independence systems over a common ground set.
///
/// The declared parameter is the sum of the parts' parameters; the class is
/// k-extendible only if every part is.
pub struct Intersection {
    parts: Vec<Box<dyn IndependenceSystem>>,
    offsets: Vec<usize>,
    declared: Declared,
}

pub fn build_intersection(parts: Vec<Box<dyn IndependenceSystem>>) -> Result<Intersection> {
    let first = parts.first().ok_or(Error::EmptyIntersection)?;
    let n = first.ground_size();
    if let Some(p) = parts.iter().find(|p| p.ground_size() != n) {
        return Err(invalid(
            "systems",
            format!("ground sizes differ: {n} vs {}", p.ground_size()),
        ));
    }
    let k = parts.iter().map(|p| p.declared().k).sum();
    let class = if parts
        .iter()
        .all(|p| p.declared().class == SystemClass::KExtendible)
    {
        SystemClass::KExtendible
    } else {
        SystemClass::KSystem
    };
    let mut offsets = Vec::with_capacity(parts.len() + 1);
    offsets.push(0);
    for p in &parts {
        offsets.push(offsets.last().unwrap() + p.tally_len());
    }
    Ok(Intersection {
        parts,
        offsets,
        declared: Declared { class, k },
    })
}

impl Intersection {
    fn slice<'a>(&self, tally: &'a [u32], i: usize) -> &'a [u32] {
        &tally[self.offsets[i]..self.offsets[i + 1]]
    }
}

impl IndependenceSystem for Intersection {
    fn ground_size(&self) -> usize {
        self.parts[0].ground_size()
    }

    fn declared(&self) -> Declared {
        self.declared
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        self.parts.iter().all(|p| p.is_independent(set))
    }

    fn tally_len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn record(&self, tally: &mut [u32], u: ElementId) {
        for (i, p) in self.parts.iter().enumerate() {
            p.record(&mut tally[self.offsets[i]..self.offsets[i + 1]], u);
        }
    }

    fn can_add(&self, set: &[ElementId], tally: &[u32], u: ElementId) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, p)| p.can_add(set, self.slice(tally, i), u))
    }
}
