use alloc::vec::Vec;

use super::IndicatriceError;
use crate::numeric::real_roots;
use crate::polyalg::{big_to_f64, MultiPoly};

/// Point `(s, t)` with `H(e^{-s}, e^{-t}) = 0` on the sweep line at `s`, taking
/// the smallest positive root in `w = e^{-t}`.
pub fn slice_point(h: &MultiPoly, s: f64) -> Option<(f64, f64)> {
    let x = libm::exp(-s);
    let w = smallest_positive_root(&univariate(h, 0, x))?;
    Some((s, -libm::log(w)))
}

fn univariate(h: &MultiPoly, fixed: usize, value: f64) -> Vec<f64> {
    let free = 1 - fixed;
    let deg = h.terms().map(|(m, _)| m.exponents()[free] as usize).max().unwrap_or(0);
    let mut c = alloc::vec![0.0; deg + 1];
    for (m, coef) in h.terms() {
        let e = m.exponents();
        c[e[free] as usize] += big_to_f64(coef) * libm::pow(value, e[fixed] as f64);
    }
    c
}

fn smallest_positive_root(c: &[f64]) -> Option<f64> {
    real_roots(c).into_iter().find(|&w| w > 0.0)
}

pub fn amoeba_slice(h: &MultiPoly, grid: usize) -> Result<Vec<(f64, f64)>, IndicatriceError> {
    amoeba_slice_in(h, grid, 0.0, 5.0)
}

/// Samples the positive-real boundary curve of `-Ω` at `grid` values of `s`
/// in `[s_min, s_max]`, ordered by `s`. When `H` does not involve `z₂` the
/// curve is a union of vertical lines, sampled along `t` instead.
pub fn amoeba_slice_in(
    h: &MultiPoly,
    grid: usize,
    s_min: f64,
    s_max: f64,
) -> Result<Vec<(f64, f64)>, IndicatriceError> {
    if h.nvars() != 2 {
        return Err(IndicatriceError::Dimension {
            expected: 2,
            found: h.nvars(),
        });
    }
    let step = |k: usize| {
        if grid <= 1 {
            s_min
        } else {
            s_min + (s_max - s_min) * k as f64 / (grid - 1) as f64
        }
    };
    if !h.depends_on(1) {
        let c = univariate(h, 1, 1.0);
        let Some(v) = smallest_positive_root(&c) else {
            return Ok(Vec::new());
        };
        let s = -libm::log(v);
        return Ok((0..grid).map(|k| (s, step(k))).collect());
    }
    Ok((0..grid).filter_map(|k| slice_point(h, step(k))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_points() {
        let f2 = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], -3)]);
        let (_, t) = slice_point(&f2, libm::log(3.0)).unwrap();
        assert!((t - libm::log(3.0)).abs() < 1e-12);
        let fib = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], -1)]);
        let (_, t) = slice_point(&fib, core::f64::consts::LN_2).unwrap();
        assert!(t.abs() < 1e-12);
        let line = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1)]);
        let pts = amoeba_slice(&line, 11).unwrap();
        assert_eq!(pts.len(), 11);
        assert!(pts.iter().all(|p| p.0.abs() < 1e-15));
    }
}
