//! Growth series by the transfer-matrix method, coefficient tables, and the
//! concave-growth check.

mod cg;
mod dp;
mod expand;
mod table;
mod transfer;

use alloc::vec::Vec;

pub use cg::{check_cg, CgReport};
pub use dp::{coefficients_dp, coefficients_dp_with, DEFAULT_ENTRY_LIMIT};
pub use expand::series_coefficients;
pub use table::{ln_biguint, CoefficientTable, TableMode};
pub use transfer::{growth_series, growth_series_with, transfer_matrix};

use crate::polyalg::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("variable map covers {found} symbols, automaton has {expected}")]
    VariableMapSize { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("table would hold about {estimate} entries, above the limit {limit}")]
    MemoryBound { estimate: u128, limit: u128 },
    #[error("denominator vanishes at the origin")]
    SingularAtOrigin,
    #[error("series coefficient at {0:?} is not an integer")]
    NonIntegral(Vec<u32>),
    #[error("series coefficient at {0:?} is negative")]
    NegativeCoefficient(Vec<u32>),
    #[error("operation needs an exact-mode table")]
    NeedsExact,
    #[error("table complete to {have}, check needs {need}")]
    InsufficientRange { need: usize, have: usize },
}

/// Assigns a series variable to every alphabet symbol. Several symbols may
/// share a variable, as `a` and `A` do in the paired free-group series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableMap {
    of_symbol: Vec<usize>,
    nvars: usize,
}

impl VariableMap {
    pub fn identity(d: usize) -> Self {
        VariableMap {
            of_symbol: (0..d).collect(),
            nvars: d,
        }
    }

    pub fn new(of_symbol: Vec<usize>, nvars: usize) -> Result<Self, SeriesError> {
        if let Some(&index) = of_symbol.iter().find(|&&v| v >= nvars) {
            return Err(SeriesError::VariableOutOfRange { index, nvars });
        }
        Ok(VariableMap { of_symbol, nvars })
    }

    /// Letters `a_i` and `A_i` of F_m both map to variable `i`.
    pub fn free_group_pairs(m: usize) -> Self {
        VariableMap {
            of_symbol: (0..2 * m).map(|k| k % m).collect(),
            nvars: m,
        }
    }

    pub fn var(&self, symbol: usize) -> usize {
        self.of_symbol[symbol]
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn symbols(&self) -> usize {
        self.of_symbol.len()
    }
}
