//! Closed forms for free groups: the paired growth series `Δ_{F_m}`, the F₃
//! indicatrice, and the cogrowth and spectral-radius formulas.

mod chi;
mod delta;
mod f3;

pub use chi::{chi_akemann, chi_kesten, chi_of_alpha, deg8_check, deg8_coefficients, CogrowthSemantics, GroupParams};
pub use delta::{delta_free_group, delta_from_fractions, r_polynomial, verify_fm_identities, FmReport};
pub use f3::{f3_quartic, psi_f3};

use crate::indicatrice::IndicatriceError;
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("rank must be at least 2")]
    Rank,
    #[error("invalid group parameters: {0}")]
    Params(&'static str),
    #[error("alpha = {alpha} outside the admissible range [{lo}, {hi}]")]
    AlphaOutOfRange { alpha: f64, lo: f64, hi: f64 },
    #[error("no admissible positive root")]
    NoPositiveRoot,
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Indicatrice(#[from] IndicatriceError),
}
