use crate::error::{invalid, Result};

/// Ratio of the shipped unconstrained subroutine.
pub const DEFAULT_ALPHA: f64 = 3.0;

fn check_alpha(alpha: f64) -> Result<()> {
    // No unconstrained algorithm beats 2.
    if !(alpha >= 2.0 && alpha.is_finite()) {
        return Err(invalid("alpha", format!("must be at least 2, got {alpha}")));
    }
    Ok(())
}

/// `⌊1 + √(2(k+1)/α)⌋` iterations, or 1 for monotone objectives.
pub fn repeated_greedy_ell(k: usize, alpha: f64, monotone: bool) -> Result<usize> {
    check_alpha(alpha)?;
    if monotone {
        return Ok(1);
    }
    Ok((1.0 + (2.0 * (k + 1) as f64 / alpha).sqrt()).floor() as usize)
}

/// `⌊1 + √(2(k+2m+1)/α)⌋` iterations, or 1 for monotone objectives.
pub fn density_rg_ell(k: usize, m: usize, alpha: f64, monotone: bool) -> Result<usize> {
    check_alpha(alpha)?;
    if monotone {
        return Ok(1);
    }
    Ok((1.0 + (2.0 * (k + 2 * m + 1) as f64 / alpha).sqrt()).floor() as usize)
}

/// `β = 2(1-ε)(1 - 1/ℓ - ε)/(k + 2m + 1 + α(ℓ-1)/2)`, with `(1-ε)` in place
/// of `(1 - 1/ℓ - ε)` when monotone.
pub fn density_rg_beta(
    k: usize,
    ell: usize,
    m: usize,
    eps: f64,
    alpha: f64,
    monotone: bool,
) -> Result<f64> {
    crate::sgs::check_eps("eps", eps)?;
    check_alpha(alpha)?;
    if ell == 0 {
        return Err(invalid("ell", "must be at least 1"));
    }
    let denom = (k + 2 * m + 1) as f64 + alpha * (ell - 1) as f64 / 2.0;
    let inner = if monotone {
        1.0 - eps
    } else {
        1.0 - 1.0 / ell as f64 - eps
    };
    if inner <= 0.0 {
        return Err(invalid(
            "ell",
            format!("1 - 1/ℓ - ε = {inner} is not positive"),
        ));
    }
    Ok(2.0 * (1.0 - eps) * inner / denom)
}

/// Parameters of the repeated greedy family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RgParams {
    pub ell: usize,
    pub alpha: f64,
    pub eps: f64,
    pub delta: f64,
    pub rho: f64,
    pub monotone: bool,
}

impl RgParams {
    /// Prescribed iteration count for a k-system with `m` knapsacks, `α = 3`,
    /// `ε = δ = 0.1`, `ρ = 0`.
    pub fn defaults(k: usize, m: usize, monotone: bool) -> Self {
        let ell = if m == 0 {
            repeated_greedy_ell(k, DEFAULT_ALPHA, monotone)
        } else {
            density_rg_ell(k, m, DEFAULT_ALPHA, monotone)
        };
        Self {
            ell: ell.expect("default alpha is valid"),
            alpha: DEFAULT_ALPHA,
            eps: 0.1,
            delta: 0.1,
            rho: 0.0,
            monotone,
        }
    }
}
