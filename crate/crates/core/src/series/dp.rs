use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::table::{CoefficientTable, TableMode};
use super::{SeriesError, VariableMap};
use crate::automaton::Automaton;
use crate::polyalg::Monomial;

/// Upper bound on `(state, vector)` cells held by one DP run.
pub const DEFAULT_ENTRY_LIMIT: u128 = 200_000_000;

trait Weight: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn accumulate(&mut self, other: &Self);
}

impl Weight for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

#[derive(Clone, Copy)]
struct LogWeight(f64);

impl Weight for LogWeight {
    fn zero() -> Self {
        LogWeight(f64::NEG_INFINITY)
    }
    fn one() -> Self {
        LogWeight(0.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == f64::NEG_INFINITY
    }
    fn accumulate(&mut self, other: &Self) {
        let (hi, lo) = if self.0 >= other.0 { (self.0, other.0) } else { (other.0, self.0) };
        if lo == f64::NEG_INFINITY {
            self.0 = hi;
        } else {
            self.0 = hi + libm::log1p(libm::exp(lo - hi));
        }
    }
}

pub fn coefficients_dp(
    a: &Automaton,
    max_total: usize,
    mode: TableMode,
) -> Result<CoefficientTable, SeriesError> {
    coefficients_dp_with(a, &VariableMap::identity(a.alphabet().len()), max_total, mode)
}

/// Counts accepting paths by frequency vector, one total-degree layer at a time.
pub fn coefficients_dp_with(
    a: &Automaton,
    vars: &VariableMap,
    max_total: usize,
    mode: TableMode,
) -> Result<CoefficientTable, SeriesError> {
    if vars.symbols() != a.alphabet().len() {
        return Err(SeriesError::VariableMapSize {
            expected: a.alphabet().len(),
            found: vars.symbols(),
        });
    }
    let d = vars.nvars();
    let estimate = binomial(max_total as u128 + d as u128, d as u128)
        .saturating_mul(a.states().len() as u128);
    if estimate > DEFAULT_ENTRY_LIMIT {
        return Err(SeriesError::MemoryBound {
            estimate,
            limit: DEFAULT_ENTRY_LIMIT,
        });
    }
    let Some(a) = a.prune_dead() else {
        return Ok(match mode {
            TableMode::Exact => CoefficientTable::from_exact(d, max_total, BTreeMap::new()),
            TableMode::Log => CoefficientTable::from_log(d, max_total, BTreeMap::new()),
        });
    };
    match mode {
        TableMode::Exact => {
            let e = run::<BigUint>(&a, vars, max_total);
            Ok(CoefficientTable::from_exact(d, max_total, e))
        }
        TableMode::Log => {
            let e = run::<LogWeight>(&a, vars, max_total);
            Ok(CoefficientTable::from_log(
                d,
                max_total,
                e.into_iter().map(|(m, w)| (m, w.0)).collect(),
            ))
        }
    }
}

fn run<W: Weight>(a: &Automaton, vars: &VariableMap, max_total: usize) -> BTreeMap<Monomial, W> {
    let n = a.states().len();
    let d = vars.nvars();
    // transitions grouped by variable
    let mut by_var: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); d];
    for t in a.transitions() {
        by_var[vars.var(t.symbol)].push((t.from, t.to));
    }
    let mut out = BTreeMap::new();
    let mut layer: BTreeMap<Vec<u32>, Vec<W>> = BTreeMap::new();
    let mut start = alloc::vec![W::zero(); n];
    for &s in a.initial() {
        start[s] = W::one();
    }
    layer.insert(alloc::vec![0; d], start);
    for total in 0..=max_total {
        for (i, w) in &layer {
            let mut acc = W::zero();
            for &f in a.final_states() {
                acc.accumulate(&w[f]);
            }
            if !acc.is_zero() {
                out.insert(Monomial::new(i.clone()), acc);
            }
        }
        if total == max_total {
            break;
        }
        let mut next: BTreeMap<Vec<u32>, Vec<W>> = BTreeMap::new();
        for (i, w) in &layer {
            for (k, edges) in by_var.iter().enumerate() {
                if edges.is_empty() {
                    continue;
                }
                let mut j = i.clone();
                j[k] += 1;
                let mut cell: Option<Vec<W>> = None;
                for &(from, to) in edges {
                    if w[from].is_zero() {
                        continue;
                    }
                    let c = cell.get_or_insert_with(|| alloc::vec![W::zero(); n]);
                    c[to].accumulate(&w[from]);
                }
                if let Some(c) = cell {
                    match next.get_mut(&j) {
                        Some(existing) => {
                            for (e, v) in existing.iter_mut().zip(&c) {
                                e.accumulate(v);
                            }
                        }
                        None => {
                            next.insert(j, c);
                        }
                    }
                }
            }
        }
        layer = next;
    }
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{catalog_automaton, CatalogName};

    #[test]
    fn fibonacci_counts() {
        let a = catalog_automaton(CatalogName::Fibonacci).unwrap();
        let t = coefficients_dp(&a, 8, TableMode::Exact).unwrap();
        assert_eq!(t.count(&[3, 2]).unwrap(), BigUint::from(6u32));
        assert!(Zero::is_zero(&t.count(&[0, 2]).unwrap()));
        assert_eq!(t.count(&[0, 0]).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn paired_free_group_mixed_pairs() {
        let a = catalog_automaton(CatalogName::FreeGroupUnambiguous(2)).unwrap();
        let t = coefficients_dp_with(&a, &VariableMap::free_group_pairs(2), 4, TableMode::Exact)
            .unwrap();
        assert_eq!(t.count(&[1, 1]).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn log_mode_tracks_exact() {
        let a = catalog_automaton(CatalogName::FreeGroupUnambiguous(2)).unwrap();
        let vars = VariableMap::free_group_pairs(2);
        let e = coefficients_dp_with(&a, &vars, 30, TableMode::Exact).unwrap();
        let l = coefficients_dp_with(&a, &vars, 30, TableMode::Log).unwrap();
        assert_eq!(e.len(), l.len());
        for (i, v) in e.log_entries() {
            let w = l.log_count(i).unwrap();
            assert!((v - w).abs() <= 1e-10, "{i:?}: {v} vs {w}");
        }
    }

    #[test]
    fn memory_bound_reported() {
        let a = catalog_automaton(CatalogName::FreeMonoid(6)).unwrap();
        assert!(matches!(
            coefficients_dp(&a, 400, TableMode::Log),
            Err(SeriesError::MemoryBound { .. })
        ));
    }
}
