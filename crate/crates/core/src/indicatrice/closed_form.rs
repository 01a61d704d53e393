use super::{Direction, ExtendedValue, IndicatriceError, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// Paired-variable series of the free group of rank 2.
    F2Delta,
    Fibonacci,
    FreeMonoid(usize),
}

fn xlogy(x: f64, y: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * libm::log(y)
    }
}

/// `-Σ r_i log r_i`.
pub fn shannon_entropy(r: &[f64]) -> f64 {
    -r.iter().map(|&x| xlogy(x, x)).sum::<f64>()
}

pub fn psi_closed_form(name: ClosedForm, r: &Direction) -> Result<ExtendedValue, IndicatriceError> {
    let d = match name {
        ClosedForm::F2Delta | ClosedForm::Fibonacci => 2,
        ClosedForm::FreeMonoid(d) => d,
    };
    if r.dim() != d {
        return Err(IndicatriceError::Dimension {
            expected: d,
            found: r.dim(),
        });
    }
    let x = r.as_slice();
    let value = match name {
        ClosedForm::F2Delta => {
            let (p, q) = (x[0], x[1]);
            let root = libm::sqrt(p * p - p * q + q * q);
            shannon_entropy(x) + xlogy(p, 2.0 * q - p + 2.0 * root) + xlogy(q, 2.0 * p - q + 2.0 * root)
        }
        ClosedForm::Fibonacci => {
            let (p, q) = (x[0], x[1]);
            if p < 0.5 {
                return Ok(ExtendedValue::neg_infinity(Method::ClosedForm));
            }
            if p == 0.5 {
                0.0
            } else {
                xlogy(p, p / (2.0 * p - 1.0)) + xlogy(q, (2.0 * p - 1.0) / q)
            }
        }
        ClosedForm::FreeMonoid(_) => shannon_entropy(x),
    };
    Ok(ExtendedValue::finite(value, None, Method::ClosedForm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::LN_2;

    fn dir(p: f64) -> Direction {
        Direction::new(alloc::vec![p, 1.0 - p]).unwrap()
    }

    #[test]
    fn documented_values() {
        let f2 = psi_closed_form(ClosedForm::F2Delta, &dir(0.5)).unwrap();
        assert!((f2.value - libm::log(3.0)).abs() < 1e-15);
        assert_eq!(psi_closed_form(ClosedForm::Fibonacci, &dir(0.5)).unwrap().value, 0.0);
        assert!(psi_closed_form(ClosedForm::Fibonacci, &dir(1.0 / 3.0)).unwrap().is_neg_infinite());
        let fib = psi_closed_form(ClosedForm::Fibonacci, &dir(2.0 / 3.0)).unwrap();
        assert!((fib.value - 2.0 / 3.0 * LN_2).abs() < 1e-15);
        let mono = psi_closed_form(ClosedForm::FreeMonoid(2), &dir(0.5)).unwrap();
        assert!((mono.value - LN_2).abs() < 1e-15);
    }
}
