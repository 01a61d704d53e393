//! Resolution of a language source (catalog name or automaton file) to the
//! objects each method needs.

use langrowth_core::automaton::{catalog_automaton, Automaton, CatalogName, Transition};
use langrowth_core::catalog::psi_f3;
use langrowth_core::indicatrice::{
    psi_boundary, psi_closed_form, psi_empirical, psi_tmap, tmap_symbol_order, ClosedForm, Direction,
    ExtendedValue, IndicatriceError, DEFAULT_CONE_EPS,
};
use langrowth_core::polyalg::{MultiPoly, RationalSeries};
use langrowth_core::series::{coefficients_dp_with, growth_series_with, CoefficientTable, TableMode, VariableMap};

use crate::error::CliError;
use crate::format::load_automaton;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedKind {
    Core(ClosedForm),
    F3,
}

/// How the T-map route sees the language.
#[derive(Clone, Debug)]
pub enum TmapRoute {
    /// Evaluate on this automaton with the direction unchanged.
    Direct(Automaton),
    /// Paired free-group language: split `r_i` evenly between a generator
    /// and its inverse on the ergodic automaton of rank `m`.
    Split(Automaton, usize),
}

#[derive(Clone, Debug)]
pub struct Language {
    pub name: String,
    pub automaton: Automaton,
    pub vars: VariableMap,
    pub closed: Option<ClosedKind>,
    pub tmap: TmapRoute,
}

/// Full shift on `d` letters, one state per last letter read.
pub fn letter_coded_monoid(d: usize) -> Automaton {
    let names: Vec<String> = (0..d).map(|i| format!("x{}", i + 1)).collect();
    let alphabet = catalog_automaton(CatalogName::FreeMonoid(d))
        .map(|a| a.alphabet().to_vec())
        .unwrap_or_else(|_| names.clone());
    let transitions = (0..d)
        .flat_map(|i| (0..d).map(move |j| Transition { from: i, symbol: j, to: j }))
        .collect();
    Automaton::new(alphabet, names, transitions, (0..d).collect(), (0..d).collect())
        .expect("full shift automaton is valid")
}

fn catalog(name: CatalogName) -> Result<Automaton, CliError> {
    catalog_automaton(name).map_err(|e| CliError::input(e.to_string()))
}

impl Language {
    pub fn resolve(language: Option<&str>, automaton: Option<&str>, m: Option<usize>, paired: bool) -> Result<Self, CliError> {
        match (language, automaton) {
            (Some(_), Some(_)) | (None, None) => {
                Err(CliError::input("give exactly one of --language and --automaton".to_string()))
            }
            (None, Some(path)) => {
                let a = load_automaton(path)?;
                let d = a.alphabet().len();
                Ok(Language {
                    name: path.to_string(),
                    vars: VariableMap::identity(d),
                    closed: None,
                    tmap: TmapRoute::Direct(a.clone()),
                    automaton: a,
                })
            }
            (Some(name), None) => Self::from_catalog(name, m, paired),
        }
    }

    fn from_catalog(name: &str, m: Option<usize>, paired: bool) -> Result<Self, CliError> {
        let lang = match name {
            "fibonacci" => {
                let a = catalog(CatalogName::Fibonacci)?;
                Language {
                    name: name.to_string(),
                    vars: VariableMap::identity(2),
                    closed: Some(ClosedKind::Core(ClosedForm::Fibonacci)),
                    tmap: TmapRoute::Direct(a.clone()),
                    automaton: a,
                }
            }
            "free_monoid" => {
                let d = m.unwrap_or(2);
                let a = catalog(CatalogName::FreeMonoid(d))?;
                Language {
                    name: name.to_string(),
                    vars: VariableMap::identity(d),
                    closed: Some(ClosedKind::Core(ClosedForm::FreeMonoid(d))),
                    tmap: TmapRoute::Direct(letter_coded_monoid(d)),
                    automaton: a,
                }
            }
            "f2_delta" => return Self::free_group(2, true, false, name),
            "free_group_unambiguous" => return Self::free_group(m.unwrap_or(2), paired, false, name),
            "free_group_ergodic" => return Self::free_group(m.unwrap_or(2), paired, true, name),
            other => {
                return Err(CliError::input(format!(
                    "unknown language {other:?}; expected fibonacci, free_monoid, f2_delta, \
                     free_group_unambiguous or free_group_ergodic"
                )))
            }
        };
        Ok(lang)
    }

    fn free_group(m: usize, paired: bool, ergodic: bool, name: &str) -> Result<Self, CliError> {
        let a = if ergodic {
            catalog(CatalogName::FreeGroupErgodic(m))?
        } else {
            catalog(CatalogName::FreeGroupUnambiguous(m))?
        };
        let route = catalog(CatalogName::FreeGroupErgodic(m))?;
        let (vars, closed, tmap) = if paired {
            let closed = match m {
                2 => Some(ClosedKind::Core(ClosedForm::F2Delta)),
                3 => Some(ClosedKind::F3),
                _ => None,
            };
            (VariableMap::free_group_pairs(m), closed, TmapRoute::Split(route, m))
        } else {
            (VariableMap::identity(2 * m), None, TmapRoute::Direct(route))
        };
        Ok(Language {
            name: name.to_string(),
            automaton: a,
            vars,
            closed,
            tmap,
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.nvars()
    }

    /// Raw series from the transfer matrix.
    pub fn series(&self) -> Result<RationalSeries, CliError> {
        Ok(growth_series_with(&self.automaton, &self.vars)?)
    }

    /// Denominator after removing common `(1 ± z_i)` factors.
    pub fn denominator(&self) -> Result<MultiPoly, CliError> {
        Ok(self.series()?.cancel_binomial_factors().denominator().clone())
    }

    pub fn table(&self, max_total: usize, mode: TableMode) -> Result<CoefficientTable, CliError> {
        Ok(coefficients_dp_with(&self.automaton, &self.vars, max_total, mode)?)
    }

    /// Automaton for spectral computations and the order of its states by symbol.
    pub fn spectral_route(&self) -> Result<(Automaton, Vec<usize>), CliError> {
        match &self.tmap {
            TmapRoute::Direct(a) => Ok((a.clone(), tmap_symbol_order(a)?)),
            TmapRoute::Split(..) => Err(CliError::inapplicable(
                "spectral quantities need a language whose symbols are the series variables; \
                 use free_group_ergodic without --paired"
                    .to_string(),
            )),
        }
    }

    pub fn psi_tmap(&self, r: &Direction, tol: f64) -> Result<ExtendedValue, CliError> {
        match &self.tmap {
            TmapRoute::Direct(a) => Ok(psi_tmap(a, r, tol)?),
            TmapRoute::Split(a, m) => {
                let half: Vec<f64> = r.as_slice().iter().map(|x| x / 2.0).collect();
                let mut split = half.clone();
                split.extend(half);
                let v = psi_tmap(a, &Direction::from_weights(&split)?, tol)?;
                let minimizer = v.minimizer.map(|th| th[..*m].to_vec());
                Ok(ExtendedValue { minimizer, ..v })
            }
        }
    }

    pub fn psi_boundary(&self, h: &MultiPoly, r: &Direction, tol: f64) -> Result<ExtendedValue, CliError> {
        Ok(psi_boundary(h, r, tol)?)
    }

    pub fn psi_closed(&self, r: &Direction) -> Result<ExtendedValue, CliError> {
        match self.closed {
            Some(ClosedKind::Core(c)) => Ok(psi_closed_form(c, r)?),
            Some(ClosedKind::F3) => psi_f3(r).map_err(|e| CliError::failure(e.to_string())),
            None => Err(CliError::inapplicable(format!("no closed form for {}", self.name))),
        }
    }

    pub fn psi_empirical(&self, t: &CoefficientTable, r: &Direction) -> Result<ExtendedValue, CliError> {
        Ok(psi_empirical(t, r, DEFAULT_CONE_EPS)?)
    }
}

impl From<IndicatriceError> for CliError {
    fn from(e: IndicatriceError) -> Self {
        match e {
            IndicatriceError::Precondition(_) | IndicatriceError::UnsupportedDenominator => {
                CliError::inapplicable(e.to_string())
            }
            IndicatriceError::InvalidDirection
            | IndicatriceError::Dimension { .. }
            | IndicatriceError::InvalidCone
            | IndicatriceError::TableTooSmall { .. } => CliError::input(e.to_string()),
            IndicatriceError::Series(s) => s.into(),
            _ => CliError::failure(e.to_string()),
        }
    }
}
