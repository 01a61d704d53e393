use alloc::vec::Vec;

use super::{Direction, ExtendedValue, IndicatriceError, Method};
use crate::series::CoefficientTable;

pub const DEFAULT_CONE_EPS: f64 = 0.05;
pub const DEFAULT_SHELL_WINDOW: usize = 5;

pub fn psi_empirical(t: &CoefficientTable, r: &Direction, cone_eps: f64) -> Result<ExtendedValue, IndicatriceError> {
    psi_empirical_with(t, r, cone_eps, DEFAULT_SHELL_WINDOW)
}

/// Max over the shells `‖i‖₁ = R`, `R = max_total - K, …, max_total - 1`, of
/// `(1/R) log Σ γ_i` restricted to the cone `‖i/R - r‖₁ < cone_eps`.
pub fn psi_empirical_with(
    t: &CoefficientTable,
    r: &Direction,
    cone_eps: f64,
    window: usize,
) -> Result<ExtendedValue, IndicatriceError> {
    if !(cone_eps > 0.0) {
        return Err(IndicatriceError::InvalidCone);
    }
    if r.dim() != t.dim() {
        return Err(IndicatriceError::Dimension {
            expected: t.dim(),
            found: r.dim(),
        });
    }
    let top = t.max_total();
    if window == 0 || top < window + 1 {
        return Err(IndicatriceError::TableTooSmall {
            need: window + 1,
            have: top,
        });
    }
    let lo = top - window;
    let mut logs: Vec<Vec<f64>> = alloc::vec![Vec::new(); window];
    for (i, lg) in t.log_entries() {
        let total: usize = i.iter().map(|&x| x as usize).sum();
        if total < lo || total >= top {
            continue;
        }
        let dist: f64 = i
            .iter()
            .zip(r.as_slice())
            .map(|(&x, &ri)| (x as f64 / total as f64 - ri).abs())
            .sum();
        if dist < cone_eps {
            logs[total - lo].push(lg);
        }
    }
    let mut best = f64::NEG_INFINITY;
    for (k, shell) in logs.iter().enumerate() {
        if shell.is_empty() {
            continue;
        }
        let m = shell.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let s: f64 = shell.iter().map(|v| libm::exp(v - m)).sum();
        best = best.max((m + libm::log(s)) / (lo + k) as f64);
    }
    if best == f64::NEG_INFINITY {
        return Ok(ExtendedValue::neg_infinity(Method::Empirical));
    }
    Ok(ExtendedValue::finite(best, None, Method::Empirical))
}
