use alloc::vec::Vec;

use super::CatalogError;
use crate::numeric::{bisect, real_roots};

#[derive(Clone, Debug, PartialEq)]
pub struct GroupParams {
    m: usize,
    p: Option<Vec<f64>>,
}

impl GroupParams {
    pub fn new(m: usize, p: Option<Vec<f64>>) -> Result<Self, CatalogError> {
        if m < 2 {
            return Err(CatalogError::Rank);
        }
        if let Some(p) = &p {
            if p.len() != m {
                return Err(CatalogError::Params("p must have one entry per generator"));
            }
            if p.iter().any(|&x| !(x > 0.0)) {
                return Err(CatalogError::Params("p entries must be positive"));
            }
            if (2.0 * p.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
                return Err(CatalogError::Params("2 Σ p_i must equal 1"));
            }
        }
        Ok(GroupParams { m, p })
    }

    /// Simple random walk: `p_i = 1/(2m)`.
    pub fn uniform(m: usize) -> Result<Self, CatalogError> {
        GroupParams::new(m, Some(alloc::vec![1.0 / (2 * m) as f64; m]))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> Option<&[f64]> {
        self.p.as_deref()
    }
}

fn akemann_objective(p: &[f64], t: f64) -> f64 {
    let m = p.len() as f64;
    p.iter().map(|pi| libm::sqrt(t * t + pi * pi)).sum::<f64>() - (m - 1.0) * t
}

fn akemann_slope(p: &[f64], t: f64) -> f64 {
    let m = p.len() as f64;
    p.iter().map(|pi| t / libm::sqrt(t * t + pi * pi)).sum::<f64>() - (m - 1.0)
}

/// `χ(p) = 2 min_{t ≥ 0} [Σ √(t² + p_i²) - (m - 1) t]`.
pub fn chi_akemann(params: &GroupParams) -> Result<f64, CatalogError> {
    let p = params.p().ok_or(CatalogError::Params("p is required"))?;
    let mut hi = p.iter().cloned().fold(0.0, f64::max);
    while akemann_slope(p, hi) <= 0.0 {
        hi *= 2.0;
    }
    let t = bisect(|t| akemann_slope(p, t), 0.0, hi, 200);
    Ok(2.0 * akemann_objective(p, t))
}

/// `√(2m - 1) / m`.
pub fn chi_kesten(m: usize) -> Result<f64, CatalogError> {
    if m < 2 {
        return Err(CatalogError::Rank);
    }
    Ok(libm::sqrt((2 * m - 1) as f64) / m as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CogrowthSemantics {
    /// `α` is the cogrowth of a normal subgroup; only `α > √(2m-1)` occurs.
    NormalSubgroup,
    /// Schreier graph of an arbitrary subgroup; flat below `√(2m-1)`.
    Schreier,
}

/// Spectral radius as a function of the cogrowth `α`:
/// `(k/α + α)/(2m)` for `α > √k`, else `√k/m`, with `k = 2m - 1`.
pub fn chi_of_alpha(alpha: f64, m: usize, semantics: CogrowthSemantics) -> Result<f64, CatalogError> {
    if m < 2 {
        return Err(CatalogError::Rank);
    }
    let k = (2 * m - 1) as f64;
    let sk = libm::sqrt(k);
    let lo = match semantics {
        CogrowthSemantics::NormalSubgroup => sk,
        CogrowthSemantics::Schreier => 1.0,
    };
    let out_of_range = match semantics {
        CogrowthSemantics::NormalSubgroup => !(alpha > sk && alpha <= k),
        CogrowthSemantics::Schreier => !(alpha >= 1.0 && alpha <= k),
    };
    if out_of_range {
        return Err(CatalogError::AlphaOutOfRange { alpha, lo, hi: k });
    }
    if alpha > sk {
        Ok((k / alpha + alpha) / (2 * m) as f64)
    } else {
        Ok(sk / m as f64)
    }
}

/// Coefficients, constant term first, of
/// `3x⁴ + 4(p₁² + p₂²)x³ + 6p₁²p₂²x² - p₁⁴p₂⁴`.
pub fn deg8_coefficients(p1: f64, p2: f64) -> [f64; 5] {
    let (a, b) = (p1 * p1, p2 * p2);
    [-(a * a * b * b), 0.0, 6.0 * a * b, 4.0 * (a + b), 3.0]
}

/// `χ` for `m = 2` through the positive root `x = t²` of the degree-8 equation.
pub fn deg8_check(p1: f64, p2: f64) -> Result<(f64, f64), CatalogError> {
    if !(p1 > 0.0 && p2 > 0.0) || (2.0 * (p1 + p2) - 1.0).abs() > 1e-12 {
        return Err(CatalogError::Params("need p1, p2 > 0 with 2(p1 + p2) = 1"));
    }
    let x = real_roots(&deg8_coefficients(p1, p2))
        .into_iter()
        .find(|&x| x > 0.0)
        .ok_or(CatalogError::NoPositiveRoot)?;
    Ok((x, 2.0 * akemann_objective(&[p1, p2], libm::sqrt(x))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_values() {
        let s3 = libm::sqrt(3.0);
        let chi = chi_akemann(&GroupParams::new(2, Some(alloc::vec![0.25, 0.25])).unwrap()).unwrap();
        assert!((chi - s3 / 2.0).abs() < 1e-12);
        let (x, c) = deg8_check(0.25, 0.25).unwrap();
        assert!((x - 1.0 / 48.0).abs() < 1e-15);
        assert!((c - s3 / 2.0).abs() < 1e-12);
        assert_eq!(chi_of_alpha(2.0, 2, CogrowthSemantics::Schreier).unwrap(), 7.0 / 8.0);
        assert_eq!(chi_of_alpha(3.0, 2, CogrowthSemantics::NormalSubgroup).unwrap(), 1.0);
        assert!(chi_of_alpha(1.5, 2, CogrowthSemantics::NormalSubgroup).is_err());
        assert!(chi_of_alpha(0.5, 2, CogrowthSemantics::Schreier).is_err());
    }
}
