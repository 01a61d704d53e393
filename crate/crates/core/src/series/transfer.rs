use num_bigint::BigInt;

use super::{SeriesError, VariableMap};
use crate::automaton::Automaton;
use crate::polyalg::{det_poly_matrix, minor, MultiPoly, PolyMatrix, RationalSeries};

/// `A(z)`: entry `(s, t)` is the sum of the variables labeling edges `s -> t`.
pub fn transfer_matrix(a: &Automaton, vars: &VariableMap) -> Result<PolyMatrix, SeriesError> {
    if vars.symbols() != a.alphabet().len() {
        return Err(SeriesError::VariableMapSize {
            expected: a.alphabet().len(),
            found: vars.symbols(),
        });
    }
    let n = a.states().len();
    let d = vars.nvars();
    let mut m = PolyMatrix::zero(n, d);
    for t in a.transitions() {
        let entry = m.get(t.from, t.to) + &MultiPoly::var(d, vars.var(t.symbol));
        m.set(t.from, t.to, entry);
    }
    Ok(m)
}

/// Growth series with one variable per symbol.
pub fn growth_series(a: &Automaton) -> Result<RationalSeries, SeriesError> {
    growth_series_with(a, &VariableMap::identity(a.alphabet().len()))
}

/// `u (I - A(z))^{-1} v` by Cramer's rule after pruning dead states.
///
/// `H = det(I - A(z))` and `G` is the sum of the cofactors `(j, i)` over
/// initial `i` and final `j`. No common factor is cancelled beyond integer
/// content; see [`RationalSeries::cancel_binomial_factors`].
pub fn growth_series_with(a: &Automaton, vars: &VariableMap) -> Result<RationalSeries, SeriesError> {
    let d = vars.nvars();
    let Some(a) = a.prune_dead() else {
        return Ok(RationalSeries::new(MultiPoly::zero(d), MultiPoly::one(d))?);
    };
    let n = a.states().len();
    let m = PolyMatrix::identity(n, d).sub(&transfer_matrix(&a, vars)?);
    let h = det_poly_matrix(&m)?;
    let mut g = MultiPoly::zero(d);
    for &i in a.initial() {
        for &j in a.final_states() {
            let c = minor(&m, j, i)?;
            g = if (i + j) % 2 == 0 { &g + &c } else { &g - &c };
        }
    }
    if h.constant_term() != BigInt::from(1) {
        return Err(SeriesError::SingularAtOrigin);
    }
    Ok(RationalSeries::new(g, h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{catalog_automaton, CatalogName};
    use alloc::string::ToString;

    #[test]
    fn fibonacci_transfer_matrix() {
        let a = catalog_automaton(CatalogName::Fibonacci).unwrap();
        let m = transfer_matrix(&a, &VariableMap::identity(2)).unwrap();
        assert_eq!(m.get(0, 0).to_string(), "z1");
        assert_eq!(m.get(0, 1).to_string(), "z2");
        assert_eq!(m.get(1, 0).to_string(), "z1");
        assert!(m.get(1, 1).is_zero());
    }

    #[test]
    fn catalog_series() {
        let fib = catalog_automaton(CatalogName::Fibonacci).unwrap();
        assert_eq!(growth_series(&fib).unwrap().to_string(), "(1 + z2) / (1 - z1 - z1*z2)");
        let mono = catalog_automaton(CatalogName::FreeMonoid(2)).unwrap();
        assert_eq!(growth_series(&mono).unwrap().to_string(), "1 / (1 - z1 - z2)");
        let f2 = catalog_automaton(CatalogName::FreeGroupUnambiguous(2)).unwrap();
        let s = growth_series_with(&f2, &VariableMap::free_group_pairs(2)).unwrap();
        assert_eq!(
            s.cancel_binomial_factors().to_string(),
            "(1 + z1 + z2 + z1*z2) / (1 - z1 - z2 - 3*z1*z2)"
        );
    }

    #[test]
    fn map_size_checked() {
        let fib = catalog_automaton(CatalogName::Fibonacci).unwrap();
        assert!(growth_series_with(&fib, &VariableMap::identity(3)).is_err());
    }
}
