use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::table::CoefficientTable;
use super::SeriesError;
use crate::polyalg::{compositions, Monomial, RationalSeries};

/// Power-series coefficients of `G / H` up to total degree `max_total`,
/// from `H(0) γ_i = G_i - Σ_{k≠0} h_k γ_{i-k}`.
pub fn series_coefficients(
    s: &RationalSeries,
    max_total: usize,
) -> Result<CoefficientTable, SeriesError> {
    let d = s.nvars();
    let h = s.denominator();
    let h0 = h.constant_term();
    if h0.is_zero() {
        return Err(SeriesError::SingularAtOrigin);
    }
    let rest: Vec<(&[u32], &BigInt)> = h
        .terms()
        .filter(|(m, _)| !m.is_one())
        .map(|(m, c)| (m.exponents(), c))
        .collect();
    let mut gamma: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    let mut out = BTreeMap::new();
    let mut shifted = alloc::vec![0u32; d];
    for n in 0..=max_total {
        for i in compositions(n as u32, d) {
            let mut v = s.numerator().coeff(&i);
            for (k, c) in &rest {
                if k.iter().zip(&i).any(|(a, b)| a > b) {
                    continue;
                }
                for ((dst, a), b) in shifted.iter_mut().zip(&i).zip(k.iter()) {
                    *dst = a - b;
                }
                if let Some(g) = gamma.get(&shifted) {
                    v -= *c * g;
                }
            }
            let (q, r) = v.div_rem(&h0);
            if !r.is_zero() {
                return Err(SeriesError::NonIntegral(i));
            }
            if q.is_zero() {
                continue;
            }
            if q.is_negative() {
                return Err(SeriesError::NegativeCoefficient(i));
            }
            out.insert(
                Monomial::new(i.clone()),
                q.to_biguint().expect("non-negative"),
            );
            gamma.insert(i, q);
        }
    }
    Ok(CoefficientTable::from_exact(d, max_total, out))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::MultiPoly;
    use num_bigint::BigUint;

    #[test]
    fn trinomial_path_count() {
        let h = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1)]);
        let s = RationalSeries::new(MultiPoly::one(2), h).unwrap();
        let t = series_coefficients(&s, 6).unwrap();
        assert_eq!(t.count(&[2, 1]).unwrap(), BigUint::from(3u32));
        assert_eq!(t.count(&[0, 0]).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn constant_term_is_numerator_at_origin() {
        let g = MultiPoly::constant(1, 5);
        let h = MultiPoly::from_i64_terms(1, &[(&[0], 1), (&[1], -2)]);
        let t = series_coefficients(&RationalSeries::new(g, h).unwrap(), 3).unwrap();
        assert_eq!(t.count(&[0]).unwrap(), BigUint::from(5u32));
        assert_eq!(t.count(&[3]).unwrap(), BigUint::from(40u32));
    }
}
