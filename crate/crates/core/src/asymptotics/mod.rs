//! Critical points of the height function `h_r(z) = -Σ r_i log z_i` on
//! `{H = 0}`, the closed-form minimal point for F₂, and the `n^{-1/2}`
//! correction fit.

mod critical;
mod fit;

pub use critical::{critical_points, f2_critical_closed, f2_denominator, hessian_scalar_f2, CriticalPoint};
pub use fit::{fit_correction, FitReport, MIN_FIT_POINTS};

use crate::indicatrice::IndicatriceError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AsymptoticsError {
    #[error("direction must have strictly positive entries")]
    NotInterior,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("no start converged to a critical point")]
    NoConvergentStart,
    #[error("parameter out of range: {0}")]
    Parameter(&'static str),
    #[error("point is not on the variety (|H| = {0:e})")]
    NotOnVariety(f64),
    #[error("only {found} admissible n in range, need {need}")]
    TooFewPoints { found: usize, need: usize },
    #[error("table complete to {have}, fit needs {need}")]
    TableTooSmall { need: usize, have: usize },
    #[error(transparent)]
    Indicatrice(#[from] IndicatriceError),
}
