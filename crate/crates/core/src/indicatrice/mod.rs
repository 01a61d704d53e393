//! The growth indicatrice `ψ(r)`: boundary optimization, the T-map route,
//! the cone-based empirical estimate and closed forms.

mod amoeba;
mod boundary;
mod closed_form;
mod empirical;
pub(crate) mod lagrange;
mod tmap;

use alloc::vec::Vec;

pub use amoeba::{amoeba_slice, amoeba_slice_in, slice_point};
pub use boundary::{psi_boundary, psi_boundary_seeded, symmetric_boundary_point};
pub use closed_form::{psi_closed_form, shannon_entropy, ClosedForm};
pub use empirical::{psi_empirical, psi_empirical_with, DEFAULT_CONE_EPS, DEFAULT_SHELL_WINDOW};
pub use tmap::{psi_tmap, tmap_symbol_order};

use crate::series::SeriesError;
use crate::spectral::SpectralError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IndicatriceError {
    #[error("direction entries must be non-negative and sum to 1")]
    InvalidDirection,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("denominator is not of the form 1 - (positive polynomial) and no boundary start was found")]
    UnsupportedDenominator,
    #[error("direction on the simplex boundary is unsupported for this denominator")]
    UnsupportedFace,
    #[error("optimizer did not converge")]
    NonConvergence,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("table complete to {have}, needs at least {need}")]
    TableTooSmall { need: usize, have: usize },
    #[error("cone half-width must be positive")]
    InvalidCone,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A point of the probability simplex.
#[derive(Clone, Debug, PartialEq)]
pub struct Direction(Vec<f64>);

impl Direction {
    pub fn new(r: Vec<f64>) -> Result<Self, IndicatriceError> {
        let s: f64 = r.iter().sum();
        if r.is_empty() || r.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) || (s - 1.0).abs() > 1e-12 {
            return Err(IndicatriceError::InvalidDirection);
        }
        Ok(Direction(r))
    }

    /// Normalizes non-negative weights.
    pub fn from_weights(w: &[f64]) -> Result<Self, IndicatriceError> {
        let s: f64 = w.iter().sum();
        if !(s > 0.0) {
            return Err(IndicatriceError::InvalidDirection);
        }
        Direction::new(w.iter().map(|x| x / s).collect())
    }

    pub fn uniform(d: usize) -> Self {
        Direction(alloc::vec![1.0 / d as f64; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn is_interior(&self) -> bool {
        self.0.iter().all(|&x| x > 0.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Boundary,
    Tmap,
    Empirical,
    ClosedForm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Boundary => "boundary",
            Method::Tmap => "tmap",
            Method::Empirical => "empirical",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// A value of `ψ` in `ℝ ∪ {-∞}` with the boundary point `θ*` that attains it.
/// Coordinates of `θ*` are `+∞` for variables dropped on a simplex face.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedValue {
    pub value: f64,
    pub minimizer: Option<Vec<f64>>,
    pub method: Method,
}

impl ExtendedValue {
    pub fn finite(value: f64, minimizer: Option<Vec<f64>>, method: Method) -> Self {
        ExtendedValue {
            value,
            minimizer,
            method,
        }
    }

    pub fn neg_infinity(method: Method) -> Self {
        ExtendedValue {
            value: f64::NEG_INFINITY,
            minimizer: None,
            method,
        }
    }

    pub fn is_neg_infinite(&self) -> bool {
        self.value == f64::NEG_INFINITY
    }

    /// `φ(r) = e^{ψ(r)}`.
    pub fn growth_exponent(&self) -> f64 {
        libm::exp(self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_validation() {
        assert!(Direction::new(alloc::vec![0.5, 0.5]).is_ok());
        assert!(Direction::new(alloc::vec![0.6, 0.5]).is_err());
        assert!(Direction::new(alloc::vec![-0.1, 1.1]).is_err());
        let d = Direction::from_weights(&[2.0, 1.0]).unwrap();
        assert!((d.as_slice()[0] - 2.0 / 3.0).abs() < 1e-16);
        assert!(!Direction::new(alloc::vec![1.0, 0.0]).unwrap().is_interior());
    }
}
