use crate::constraints::IndependenceSystem;
use crate::error::{Error, Result};
use crate::objectives::Objective;
use crate::scalar::Scalar;
use crate::set::ElementId;

/// Largest ground set the exhaustive checks accept.
pub const CLASS_CHECK_CAP: usize = 10;

const TOLERANCE: f64 = 1e-9;

fn guard(n: usize) -> Result<()> {
    if n > CLASS_CHECK_CAP {
        return Err(Error::TooLarge {
            n,
            cap: CLASS_CHECK_CAP,
        });
    }
    Ok(())
}

fn members(mask: usize) -> Vec<ElementId> {
    (0..usize::BITS as usize)
        .filter(|&i| mask >> i & 1 == 1)
        .collect()
}

fn feasibility_table(sys: &dyn IndependenceSystem) -> Vec<bool> {
    let n = sys.ground_size();
    (0..1usize << n)
        .map(|mask| sys.is_independent(&members(mask)))
        .collect()
}

/// Submasks of `mask`, including `mask` and 0.
fn submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

/// Whether the system is k-extendible: for all independent `A ⊆ B` and
/// `u ∉ B` with `A + u` independent, some `Y ⊆ B \ A` with `|Y| <= k` makes
/// `(B \ Y) + u` independent.
pub fn check_extendible(sys: &dyn IndependenceSystem, k: usize) -> Result<bool> {
    let n = sys.ground_size();
    guard(n)?;
    let ok = feasibility_table(sys);
    for b in 0..1usize << n {
        if !ok[b] {
            continue;
        }
        for a in submasks(b) {
            for u in 0..n {
                let bit = 1 << u;
                if b & bit != 0 || !ok[a | bit] {
                    continue;
                }
                let found = submasks(b & !a)
                    .filter(|y| y.count_ones() as usize <= k)
                    .any(|y| ok[(b & !y) | bit]);
                if !found {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether the system is a k-system: within every subset of the ground set,
/// the largest base is at most `k` times the smallest.
pub fn check_k_system(sys: &dyn IndependenceSystem, k: usize) -> Result<bool> {
    let n = sys.ground_size();
    guard(n)?;
    let ok = feasibility_table(sys);
    for x in 0..1usize << n {
        let (mut lo, mut hi) = (usize::MAX, 0);
        for s in submasks(x) {
            if !ok[s] {
                continue;
            }
            let maximal = (0..n).all(|v| {
                let bit = 1 << v;
                x & bit == 0 || s & bit != 0 || !ok[s | bit]
            });
            if maximal {
                let size = s.count_ones() as usize;
                lo = lo.min(size);
                hi = hi.max(size);
            }
        }
        if hi > k * lo {
            return Ok(false);
        }
    }
    Ok(true)
}

fn value_table<T: Scalar>(f: &dyn Objective<T>) -> Result<Vec<T>> {
    let n = f.ground_size();
    guard(n)?;
    Ok((0..1usize << n)
        .map(|mask| f.evaluate(&members(mask)))
        .collect())
}

/// `f(u | A) >= f(u | B) - 1e-9` for all `A ⊆ B` and `u ∉ B`.
pub fn check_submodular<T: Scalar>(f: &dyn Objective<T>) -> Result<bool> {
    let v = value_table(f)?;
    let n = f.ground_size();
    let tol = T::lit(TOLERANCE);
    for b in 0..1usize << n {
        for a in submasks(b) {
            for u in 0..n {
                let bit = 1 << u;
                if b & bit != 0 {
                    continue;
                }
                if v[a | bit] - v[a] < v[b | bit] - v[b] - tol {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `f(A) <= f(A + u) + 1e-9` for every `A` and `u`.
pub fn check_monotone<T: Scalar>(f: &dyn Objective<T>) -> Result<bool> {
    let v = value_table(f)?;
    let n = f.ground_size();
    let tol = T::lit(TOLERANCE);
    for a in 0..1usize << n {
        for u in 0..n {
            if v[a] > v[a | 1 << u] + tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
