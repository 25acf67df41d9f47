use crate::constraints::{Declared, SystemClass};
use crate::error::{invalid, Result};

/// The exchange bound `p`: `max(k, ℓ-1)` for k-extendible systems and
/// `k + ℓ - 1` for k-systems.
pub fn exchange_bound(declared: Declared, ell: usize) -> usize {
    match declared.class {
        SystemClass::KExtendible => declared.k.max(ell.saturating_sub(1)),
        SystemClass::KSystem => declared.k + ell.saturating_sub(1),
    }
}

/// Number of solutions prescribed by the approximation analysis.
///
/// Non-monotone: `M + 1` with `M = max(⌈√(1+2m)⌉, k)` on k-extendible systems
/// and `⌊2 + √(k+2m+2)⌋` on k-systems. With `m = 0` these are `k + 1` and
/// `⌊2 + √(k+2)⌋`. Monotone: `k + 1` on k-extendible systems, `1` otherwise.
pub fn choose_ell(class: SystemClass, k: usize, m: usize, monotone: bool) -> usize {
    match (class, monotone) {
        (SystemClass::KExtendible, true) => k + 1,
        (SystemClass::KSystem, true) => 1,
        (SystemClass::KExtendible, false) => {
            let root = ((1 + 2 * m) as f64).sqrt().ceil() as usize;
            root.max(k) + 1
        }
        (SystemClass::KSystem, false) => (2.0 + ((k + 2 * m + 2) as f64).sqrt()).floor() as usize,
    }
}

pub(crate) fn check_eps(name: &'static str, eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(invalid(name, format!("must lie in (0, 1/2), got {eps}")));
    }
    Ok(())
}

/// Scale `β` relating the density grid to `Δ_f`:
/// `2(1-ε)(1 - 1/ℓ - ε)/(p+1+2m)`, or `2(1-ε)²/(p+1+2m)` when monotone.
pub fn choose_beta(
    class: SystemClass,
    k: usize,
    ell: usize,
    m: usize,
    eps: f64,
    monotone: bool,
) -> Result<f64> {
    check_eps("eps", eps)?;
    if ell == 0 {
        return Err(invalid("ell", "must be at least 1"));
    }
    let p = exchange_bound(Declared { class, k }, ell) as f64;
    let denom = p + 1.0 + 2.0 * m as f64;
    if monotone {
        return Ok(2.0 * (1.0 - eps) * (1.0 - eps) / denom);
    }
    if ell == 1 {
        return Err(invalid(
            "ell",
            "the non-monotone density scale needs at least 2 solutions",
        ));
    }
    let inner = 1.0 - 1.0 / ell as f64 - eps;
    if inner <= 0.0 {
        return Err(invalid(
            "eps",
            format!("1 - 1/ℓ - ε = {inner} is not positive"),
        ));
    }
    Ok(2.0 * (1.0 - eps) * inner / denom)
}

/// Parameters of the simultaneous greedy family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SgsParams {
    pub ell: usize,
    pub eps: f64,
    pub delta: f64,
    pub rho: f64,
    pub monotone: bool,
    pub declared: Declared,
    pub m: usize,
}

impl SgsParams {
    /// Analysis-prescribed `ℓ` with `ε = δ = 0.1` and `ρ = 0`.
    pub fn defaults(declared: Declared, m: usize, monotone: bool) -> Self {
        Self {
            ell: choose_ell(declared.class, declared.k, m, monotone),
            eps: 0.1,
            delta: 0.1,
            rho: 0.0,
            monotone,
            declared,
            m,
        }
    }

    pub fn p(&self) -> usize {
        exchange_bound(self.declared, self.ell)
    }

    pub fn beta(&self) -> Result<f64> {
        choose_beta(
            self.declared.class,
            self.declared.k,
            self.ell,
            self.m,
            self.eps,
            self.monotone,
        )
    }
}
