use alloc::vec::Vec;

use super::AsymptoticsError;
use crate::indicatrice::Direction;
use crate::series::CoefficientTable;

pub const MIN_FIT_POINTS: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct FitReport {
    pub slope: f64,
    /// Estimate of `log c`.
    pub intercept: f64,
    /// Root-mean-square residual of the regression.
    pub residual: f64,
    pub n_min: usize,
    pub n_max: usize,
    pub points: usize,
}

/// Least-squares fit of `log γ_{nr} - nψ = log c + slope · log n` over the
/// `n` in `[n_min, n_max]` with `nr` a lattice point and `γ_{nr} > 0`.
pub fn fit_correction(
    t: &CoefficientTable,
    r: &Direction,
    psi: f64,
    n_min: usize,
    n_max: usize,
) -> Result<FitReport, AsymptoticsError> {
    if r.dim() != t.dim() {
        return Err(AsymptoticsError::Dimension {
            expected: t.dim(),
            found: r.dim(),
        });
    }
    if n_max > t.max_total() {
        return Err(AsymptoticsError::TableTooSmall {
            need: n_max,
            have: t.max_total(),
        });
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for n in n_min.max(1)..=n_max {
        let scaled: Vec<f64> = r.as_slice().iter().map(|x| x * n as f64).collect();
        if scaled.iter().any(|v| (v - libm::round(*v)).abs() > 1e-9) {
            continue;
        }
        let i: Vec<u32> = scaled.iter().map(|v| libm::round(*v) as u32).collect();
        if let Some(lg) = t.log_count(&i) {
            xs.push(libm::log(n as f64));
            ys.push(lg - n as f64 * psi);
        }
    }
    if xs.len() < MIN_FIT_POINTS {
        return Err(AsymptoticsError::TooFewPoints {
            found: xs.len(),
            need: MIN_FIT_POINTS,
        });
    }
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let e = y - intercept - slope * x;
            e * e
        })
        .sum();
    Ok(FitReport {
        slope,
        intercept,
        residual: libm::sqrt(sse / k),
        n_min,
        n_max,
        points: xs.len(),
    })
}
