//! Perron-Frobenius data, the Parry measure, rate functions and the T-map.

mod ldp;
mod parry;
mod perron;
mod rate;
mod tmap;

use alloc::vec::Vec;

pub use ldp::{simulate_ldp, LdpEstimate, MAX_SIMULATION_STEPS};
pub use parry::{parry, SpectralData};
pub use perron::{perron, PerronData, DEFAULT_PERRON_TOL};
pub use rate::{rate_function, sanov_rate};
pub use tmap::{t_map, verify_t_identities, TIdentityReport, TMap};

pub(crate) use rate::log_linear_minimize;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("matrix is not irreducible")]
    Reducible,
    #[error("power iteration did not converge")]
    NonConvergence,
    #[error("entry ({0}, {1}) is not 0 or 1")]
    NotZeroOne(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("direction must have strictly positive entries")]
    NotInterior,
    #[error("optimizer did not converge")]
    Optimizer,
    #[error("window must be positive")]
    InvalidWindow,
    #[error("simulation of {0} steps exceeds the budget")]
    Budget(u128),
    #[error("matrix is not row-stochastic")]
    NotStochastic,
}

/// Row-major square matrix with non-negative rows summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct StochasticMatrix {
    n: usize,
    data: Vec<f64>,
}

impl StochasticMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, SpectralError> {
        if data.len() != n * n {
            return Err(SpectralError::Dimension {
                expected: n * n,
                found: data.len(),
            });
        }
        for i in 0..n {
            let row = &data[i * n..(i + 1) * n];
            let s: f64 = row.iter().sum();
            if row.iter().any(|&x| x < 0.0 || !x.is_finite()) || (s - 1.0).abs() > 1e-9 {
                return Err(SpectralError::NotStochastic);
            }
        }
        Ok(StochasticMatrix { n, data })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}
