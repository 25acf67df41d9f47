use crate::constraints::{Declared, IndependenceSystem};
use crate::error::{invalid, Result};
use crate::scalar::Scalar;
use crate::set::ElementId;

fn check_params(k: usize, h: usize, m: usize) -> Result<()> {
    if k == 0 || h == 0 || m == 0 {
        return Err(invalid("k, h, m", "must all be positive"));
    }
    if !h.is_multiple_of(2 * k) {
        return Err(invalid(
            "h",
            format!("{h} is not a multiple of 2k = {}", 2 * k),
        ));
    }
    Ok(())
}

/// Resource usage of `x` elements of the first group:
/// `g(x) = min(x, 2km/h) + max((x - 2km/h)/k, 0)`.
pub fn g_eval<T: Scalar>(x: usize, k: usize, h: usize, m: usize) -> Result<T> {
    check_params(k, h, m)?;
    let knee = T::count(2 * k * m) / T::count(h);
    let x = T::count(x);
    Ok(x.min(knee) + ((x - knee) / T::count(k)).max(T::zero()))
}

/// The k-extendible system built from `h` groups of `k*m` elements each, in
/// which elements of the first group become cheap once enough of them are
/// taken. A set `S` is independent iff `g(|S ∩ H1|) + |S \ H1| <= m`.
///
/// Element `u` belongs to group `u / (k*m)`; group 0 is `H1`.
#[derive(Debug, Clone)]
pub struct HardnessSystemM {
    k: usize,
    h: usize,
    m: usize,
}

pub fn build_hardness_m(k: usize, h: usize, m: usize) -> Result<HardnessSystemM> {
    check_params(k, h, m)?;
    Ok(HardnessSystemM { k, h, m })
}

impl HardnessSystemM {
    pub fn params(&self) -> (usize, usize, usize) {
        (self.k, self.h, self.m)
    }

    pub fn group_size(&self) -> usize {
        self.k * self.m
    }

    /// Largest independent set, all inside `H1`: `k(m - 2km/h) + 2km/h`.
    pub fn max_independent_size(&self) -> usize {
        let (k, h, m) = (self.k, self.h, self.m);
        // 2km/h = m / (h / 2k) may be fractional; the formula stays integral
        // only when it is not, so compute exactly in rationals and floor.
        let t = h / (2 * k);
        (k * m * t - k * m + m) / t
    }

    fn in_first_group(&self, u: ElementId) -> bool {
        u < self.group_size()
    }

    // Scaled by k*h so that every quantity is an integer.
    fn fits(&self, first: usize, rest: usize) -> bool {
        let (k, h, m) = (self.k as u128, self.h as u128, self.m as u128);
        let (x, rest) = (first as u128, rest as u128);
        let g_scaled = if x * h <= 2 * k * m {
            x * k * h
        } else {
            x * h + (k - 1) * 2 * k * m
        };
        g_scaled + rest * k * h <= m * k * h
    }
}

impl IndependenceSystem for HardnessSystemM {
    fn ground_size(&self) -> usize {
        self.h * self.k * self.m
    }

    fn declared(&self) -> Declared {
        Declared::extendible(self.k)
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        let first = set.iter().filter(|&&u| self.in_first_group(u)).count();
        self.fits(first, set.len() - first)
    }

    fn tally_len(&self) -> usize {
        1
    }

    fn record(&self, tally: &mut [u32], u: ElementId) {
        if self.in_first_group(u) {
            tally[0] += 1;
        }
    }

    fn can_add(&self, set: &[ElementId], tally: &[u32], u: ElementId) -> bool {
        let first = tally[0] as usize + usize::from(self.in_first_group(u));
        let rest = set.len() + 1 - first;
        self.fits(first, rest)
    }
}
