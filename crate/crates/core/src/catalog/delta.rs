use alloc::vec::Vec;

use num_bigint::BigInt;

use super::CatalogError;
use crate::automaton::{catalog_automaton, CatalogName};
use crate::polyalg::{Monomial, MultiPoly, RationalSeries};
use crate::series::{growth_series_with, VariableMap};

/// `R(z) = 1 - Σ_{S ≠ ∅} (2|S| - 1) Π_{i∈S} z_i`.
pub fn r_polynomial(m: usize) -> MultiPoly {
    let mut p = MultiPoly::one(m);
    for mask in 1u64..(1u64 << m) {
        let e: Vec<u32> = (0..m).map(|i| ((mask >> i) & 1) as u32).collect();
        let l = mask.count_ones() as i64;
        p.add_term(Monomial::new(e), BigInt::from(-(2 * l - 1)));
    }
    p
}

fn one_plus(m: usize, i: usize) -> MultiPoly {
    &MultiPoly::one(m) + &MultiPoly::var(m, i)
}

fn product(m: usize, f: impl Fn(usize) -> MultiPoly) -> MultiPoly {
    (0..m).fold(MultiPoly::one(m), |acc, i| &acc * &f(i))
}

/// `Π(1 + z_i) / R(z)`.
pub fn delta_free_group(m: usize) -> Result<RationalSeries, CatalogError> {
    if m < 2 {
        return Err(CatalogError::Rank);
    }
    let num = product(m, |i| one_plus(m, i));
    Ok(RationalSeries::new(num, r_polynomial(m)).map_err(crate::series::SeriesError::from)?)
}

/// `1 / (1 - 2 Σ z_i/(1 + z_i))` with denominators cleared.
pub fn delta_from_fractions(m: usize) -> Result<RationalSeries, CatalogError> {
    if m < 2 {
        return Err(CatalogError::Rank);
    }
    let all = product(m, |i| one_plus(m, i));
    let mut den = all.clone();
    for i in 0..m {
        let others = product(m, |j| if j == i { MultiPoly::one(m) } else { one_plus(m, j) });
        let term = (&MultiPoly::var(m, i) * &others).scale(&BigInt::from(2));
        den = &den - &term;
    }
    Ok(RationalSeries::new(all, den).map_err(crate::series::SeriesError::from)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FmReport {
    pub m: usize,
    /// `det(I - A(z)) = Π(1 - z_i) · R(z)`.
    pub determinant_identity: bool,
    /// Signed minor sum `= Π(1 - z_i²)`.
    pub numerator_identity: bool,
    /// The quotient reduces to `Π(1 + z_i) / R(z)`.
    pub delta_identity: bool,
    pub determinant: MultiPoly,
    pub numerator: MultiPoly,
}

impl FmReport {
    pub fn pass(&self) -> bool {
        self.determinant_identity && self.numerator_identity && self.delta_identity
    }
}

/// Checks both product identities for the free-group automaton of rank `m`
/// in paired variables, by exact polynomial comparison.
pub fn verify_fm_identities(m: usize) -> Result<FmReport, CatalogError> {
    if m < 2 {
        return Err(CatalogError::Rank);
    }
    let a = catalog_automaton(CatalogName::FreeGroupUnambiguous(m))
        .map_err(|_| CatalogError::Rank)?;
    let s = growth_series_with(&a, &VariableMap::free_group_pairs(m))?;
    let one = MultiPoly::one(m);
    let one_minus = |i: usize| &one - &MultiPoly::var(m, i);
    let det_rhs = &product(m, one_minus) * &r_polynomial(m);
    let num_rhs = product(m, |i| {
        let z = MultiPoly::var(m, i);
        &one - &(&z * &z)
    });
    let delta = delta_free_group(m)?;
    let reduced = s.cancel_binomial_factors();
    Ok(FmReport {
        m,
        determinant_identity: *s.denominator() == det_rhs,
        numerator_identity: *s.numerator() == num_rhs,
        delta_identity: reduced.numerator() == delta.numerator() && reduced.denominator() == delta.denominator(),
        determinant: s.denominator().clone(),
        numerator: s.numerator().clone(),
    })
}
