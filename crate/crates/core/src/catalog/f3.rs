use alloc::vec::Vec;

use super::CatalogError;
use crate::indicatrice::{psi_closed_form, ClosedForm, Direction, ExtendedValue, IndicatriceError, Method};
use crate::numeric::{bisect, real_roots};

const CONTINUATION_STEPS: usize = 200;

/// Coefficients, constant term first, of the quartic in `z = e^s` for the
/// direction `(p, q, 1 - p - q)`.
pub fn f3_quartic(p: f64, q: f64) -> [f64; 5] {
    [
        -45.0 * p * p,
        12.0 * p * (5.0 * p - 6.0),
        2.0 * (33.0 * p * p - 32.0 * p * q - 8.0 * p - 32.0 * q * q + 32.0 * q - 8.0),
        4.0 * p * (7.0 * p - 2.0),
        3.0 * p * p,
    ]
}

/// Positive root of the quartic continued from `z = 5` at the barycenter
/// along the segment to `(p, q)`.
fn branch_root(p: f64, q: f64) -> Option<f64> {
    let (p0, q0) = (1.0 / 3.0, 1.0 / 3.0);
    let mut z = 5.0;
    for k in 1..=CONTINUATION_STEPS {
        let s = k as f64 / CONTINUATION_STEPS as f64;
        let roots = real_roots(&f3_quartic(p0 + s * (p - p0), q0 + s * (q - q0)));
        z = roots
            .into_iter()
            .filter(|&x| x > 0.0)
            .min_by(|a, b| (a - z).abs().partial_cmp(&(b - z).abs()).expect("finite roots"))?;
    }
    Some(z)
}

/// `ψ_{F₃}(r)` from the quartic. The root gives `z₁ = e^{-s}`; `z₂` and `z₃`
/// then follow from `R(z) = 0` and the Lagrange condition between `r₂` and `r₃`.
pub fn psi_f3(r: &Direction) -> Result<ExtendedValue, CatalogError> {
    if r.dim() != 3 {
        return Err(IndicatriceError::Dimension {
            expected: 3,
            found: r.dim(),
        }
        .into());
    }
    if !r.is_interior() {
        // R restricted to a coordinate face is the rank-2 denominator.
        let rv = r.as_slice();
        let zero = rv.iter().position(|&x| x == 0.0).expect("boundary direction");
        let pair: Vec<f64> = (0..3).filter(|&i| i != zero).map(|i| rv[i]).collect();
        return Ok(psi_closed_form(ClosedForm::F2Delta, &Direction::new(pair)?)?);
    }
    let rv = r.as_slice();
    let z = branch_root(rv[0], rv[1]).ok_or(CatalogError::NoPositiveRoot)?;
    let z1 = 1.0 / z;
    let z3_of = |z2: f64| (1.0 - z1 - z2 - 3.0 * z1 * z2) / (1.0 + 3.0 * z1 + 3.0 * z2 + 5.0 * z1 * z2);
    // z_i ∂R/∂z_i up to the common sign
    let zh = |own: f64, a: f64, b: f64| own * (1.0 + 3.0 * a + 3.0 * b + 5.0 * a * b);
    let balance = |z2: f64| {
        let z3 = z3_of(z2);
        rv[2] * zh(z2, z1, z3) - rv[1] * zh(z3, z1, z2)
    };
    let top = (1.0 - z1) / (1.0 + 3.0 * z1);
    if !(top > 0.0) {
        return Err(CatalogError::NoPositiveRoot);
    }
    let z2 = bisect(balance, 0.0, top, 200);
    let z3 = z3_of(z2);
    let zs: Vec<f64> = alloc::vec![z1, z2, z3];
    let value = -rv.iter().zip(&zs).map(|(a, b)| a * libm::log(*b)).sum::<f64>();
    Ok(ExtendedValue::finite(value, None, Method::ClosedForm))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barycenter_quartic_root() {
        let c = f3_quartic(1.0 / 3.0, 1.0 / 3.0);
        let scaled: Vec<f64> = c.iter().map(|x| x * 9.0).collect();
        let expect = [-45.0, -156.0, -62.0, 4.0, 3.0];
        for (a, b) in scaled.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12);
        }
        let v = psi_f3(&Direction::uniform(3)).unwrap();
        assert!((v.value - libm::log(5.0)).abs() < 1e-12);
    }

    #[test]
    fn faces_match_boundary() {
        let h = super::super::r_polynomial(3);
        for r in [[0.5, 0.5, 0.0], [0.0, 0.3, 0.7], [1.0, 0.0, 0.0]] {
            let r = Direction::new(r.to_vec()).unwrap();
            let a = psi_f3(&r).unwrap().value;
            let b = crate::indicatrice::psi_boundary(&h, &r, 1e-12).unwrap().value;
            assert!((a - b).abs() < 1e-9, "{r:?}: {a} vs {b}");
        }
    }
}
