use langrowth_core::polyalg::PolyError;
use langrowth_core::series::SeriesError;

use crate::format::FormatError;

pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_SIZE_BOUND: i32 = 3;
pub const EXIT_INAPPLICABLE: i32 = 4;

/// An error carrying the process exit status it maps to.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn failure(message: String) -> Self {
        CliError {
            code: EXIT_CHECK_FAILED,
            message,
        }
    }

    pub fn input(message: String) -> Self {
        CliError {
            code: EXIT_INVALID_INPUT,
            message,
        }
    }

    pub fn size(message: String) -> Self {
        CliError {
            code: EXIT_SIZE_BOUND,
            message,
        }
    }

    pub fn inapplicable(message: String) -> Self {
        CliError {
            code: EXIT_INAPPLICABLE,
            message,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::MemoryBound { .. } | SeriesError::Poly(PolyError::SizeBound { .. }) => {
                CliError::size(e.to_string())
            }
            SeriesError::InsufficientRange { .. } | SeriesError::VariableMapSize { .. } => {
                CliError::input(e.to_string())
            }
            _ => CliError::failure(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<langrowth_core::spectral::SpectralError> for CliError {
    fn from(e: langrowth_core::spectral::SpectralError) -> Self {
        use langrowth_core::spectral::SpectralError as S;
        match e {
            S::Reducible | S::NotZeroOne(..) => CliError::inapplicable(e.to_string()),
            S::Dimension { .. } | S::NotInterior | S::InvalidWindow | S::NotStochastic => {
                CliError::input(e.to_string())
            }
            S::Budget(_) => CliError::size(e.to_string()),
            _ => CliError::failure(e.to_string()),
        }
    }
}

impl From<langrowth_core::asymptotics::AsymptoticsError> for CliError {
    fn from(e: langrowth_core::asymptotics::AsymptoticsError) -> Self {
        use langrowth_core::asymptotics::AsymptoticsError as A;
        match e {
            A::NoConvergentStart | A::NotOnVariety(_) => CliError::failure(e.to_string()),
            A::Indicatrice(i) => i.into(),
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<langrowth_core::catalog::CatalogError> for CliError {
    fn from(e: langrowth_core::catalog::CatalogError) -> Self {
        use langrowth_core::catalog::CatalogError as C;
        match e {
            C::NoPositiveRoot => CliError::failure(e.to_string()),
            C::Series(s) => s.into(),
            C::Indicatrice(i) => i.into(),
            _ => CliError::input(e.to_string()),
        }
    }
}
