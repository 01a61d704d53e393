use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::SeriesError;
use crate::polyalg::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMode {
    Exact,
    Log,
}

#[derive(Clone, Debug, PartialEq)]
enum Entries {
    Exact(BTreeMap<Monomial, BigUint>),
    Log(BTreeMap<Monomial, f64>),
}

/// Counts `γ_i` for all frequency vectors with `‖i‖₁ <= max_total`.
/// Absent entries are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    dim: usize,
    max_total: usize,
    entries: Entries,
}

/// Natural log of a big integer, accurate for any size.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().expect("fits in f64"));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("fits in f64");
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

impl CoefficientTable {
    pub fn from_exact(
        dim: usize,
        max_total: usize,
        entries: BTreeMap<Monomial, BigUint>,
    ) -> Self {
        debug_assert!(entries.iter().all(|(m, c)| !c.is_zero()
            && m.nvars() == dim
            && m.degree() <= max_total as u64));
        CoefficientTable {
            dim,
            max_total,
            entries: Entries::Exact(entries),
        }
    }

    pub fn from_log(dim: usize, max_total: usize, entries: BTreeMap<Monomial, f64>) -> Self {
        debug_assert!(entries.values().all(|v| v.is_finite()));
        CoefficientTable {
            dim,
            max_total,
            entries: Entries::Log(entries),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn max_total(&self) -> usize {
        self.max_total
    }

    pub fn mode(&self) -> TableMode {
        match self.entries {
            Entries::Exact(_) => TableMode::Exact,
            Entries::Log(_) => TableMode::Log,
        }
    }

    pub fn len(&self) -> usize {
        match &self.entries {
            Entries::Exact(e) => e.len(),
            Entries::Log(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exact count; zero when absent. Fails on log-domain tables.
    pub fn count(&self, i: &[u32]) -> Result<BigUint, SeriesError> {
        match &self.entries {
            Entries::Exact(e) => Ok(e
                .get(&Monomial::new(i.to_vec()))
                .cloned()
                .unwrap_or_default()),
            Entries::Log(_) => Err(SeriesError::NeedsExact),
        }
    }

    /// `log γ_i`, `None` when the count is zero.
    pub fn log_count(&self, i: &[u32]) -> Option<f64> {
        let key = Monomial::new(i.to_vec());
        match &self.entries {
            Entries::Exact(e) => e.get(&key).map(ln_biguint),
            Entries::Log(e) => e.get(&key).copied(),
        }
    }

    /// Exact entries in graded order.
    pub fn exact_entries(&self) -> Option<impl Iterator<Item = (&[u32], &BigUint)>> {
        match &self.entries {
            Entries::Exact(e) => Some(e.iter().map(|(m, c)| (m.exponents(), c))),
            Entries::Log(_) => None,
        }
    }

    /// `(i, log γ_i)` in graded order, for either mode.
    pub fn log_entries(&self) -> Vec<(&[u32], f64)> {
        match &self.entries {
            Entries::Exact(e) => e.iter().map(|(m, c)| (m.exponents(), ln_biguint(c))).collect(),
            Entries::Log(e) => e.iter().map(|(m, v)| (m.exponents(), *v)).collect(),
        }
    }

    /// Sum of the counts on the shell `‖i‖₁ = n`.
    pub fn shell_sum(&self, n: usize) -> Result<BigUint, SeriesError> {
        let Some(entries) = self.exact_entries() else {
            return Err(SeriesError::NeedsExact);
        };
        Ok(entries
            .filter(|(i, _)| i.iter().map(|&x| x as usize).sum::<usize>() == n)
            .map(|(_, c)| c.clone())
            .sum())
    }

    pub fn to_log(&self) -> CoefficientTable {
        match &self.entries {
            Entries::Exact(e) => CoefficientTable::from_log(
                self.dim,
                self.max_total,
                e.iter().map(|(m, c)| (m.clone(), ln_biguint(c))).collect(),
            ),
            Entries::Log(_) => self.clone(),
        }
    }

    /// Copy restricted to `‖i‖₁ <= max_total`.
    pub fn truncated(&self, max_total: usize) -> CoefficientTable {
        let keep = |m: &Monomial| m.degree() <= max_total as u64;
        let max_total = max_total.min(self.max_total);
        match &self.entries {
            Entries::Exact(e) => CoefficientTable::from_exact(
                self.dim,
                max_total,
                e.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
            ),
            Entries::Log(e) => CoefficientTable::from_log(
                self.dim,
                max_total,
                e.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), *c)).collect(),
            ),
        }
    }
}
