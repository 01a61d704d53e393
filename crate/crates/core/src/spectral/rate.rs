use alloc::vec::Vec;

use super::perron::{perron, DEFAULT_PERRON_TOL};
use super::{SpectralError, StochasticMatrix};
use crate::automaton::AdjacencyMatrix;
use crate::indicatrice::{Direction, ExtendedValue};
use crate::numeric::{minimize_convex, NewtonOptions, Outcome};

/// `I(r) = log ρ - ψ(r)`, infinite where `ψ = -∞`.
pub fn rate_function(
    a: &AdjacencyMatrix,
    r: &Direction,
    psi: &ExtendedValue,
) -> Result<f64, SpectralError> {
    if r.dim() != a.size() {
        return Err(SpectralError::Dimension {
            expected: a.size(),
            found: r.dim(),
        });
    }
    if psi.is_neg_infinite() {
        return Ok(f64::INFINITY);
    }
    let rho = perron(a, DEFAULT_PERRON_TOL)?.rho;
    Ok(libm::log(rho) - psi.value)
}

/// `sup_{u > 0} Σ_j r_j log(u_j / (uP)_j)`, computed in `x = log u` with `u_1 = 1`.
pub fn sanov_rate(p: &StochasticMatrix, r: &Direction, tol: f64) -> Result<f64, SpectralError> {
    if r.dim() != p.size() {
        return Err(SpectralError::Dimension {
            expected: p.size(),
            found: r.dim(),
        });
    }
    let res = log_linear_minimize(p.as_slice(), p.size(), r.as_slice(), tol)?;
    Ok(-res.value)
}

pub(crate) struct LogLinearResult {
    /// Infimum, `-∞` when unbounded below.
    pub value: f64,
    /// Full coordinate vector, `x_0 = 0`.
    pub x: Vec<f64>,
}

/// Minimizes `Φ(x) = -⟨r, x⟩ + Σ_j r_j log Σ_i w_ij e^{x_i}` over `x` with `x_0 = 0`.
/// `Φ` is convex; both the T-map route and the Sanov route reduce to it.
pub(crate) fn log_linear_minimize(
    w: &[f64],
    n: usize,
    r: &[f64],
    tol: f64,
) -> Result<LogLinearResult, SpectralError> {
    let model = |y: &[f64]| {
        let mut x = alloc::vec![0.0; n];
        x[1..].copy_from_slice(y);
        phi_model(w, n, r, &x)
    };
    let opts = NewtonOptions {
        gtol: tol,
        ..NewtonOptions::default()
    };
    let y0 = alloc::vec![0.0; n - 1];
    match minimize_convex(model, &y0, &opts) {
        Ok(Outcome::Converged { x, f, .. }) => {
            let mut full = alloc::vec![0.0];
            full.extend(x);
            Ok(LogLinearResult { value: f, x: full })
        }
        Ok(Outcome::Unbounded { x, .. }) => {
            let mut full = alloc::vec![0.0];
            full.extend(x);
            Ok(LogLinearResult {
                value: f64::NEG_INFINITY,
                x: full,
            })
        }
        Err(_) => Err(SpectralError::Optimizer),
    }
}

/// Value, gradient and Hessian of `Φ` in the free coordinates `x_1..x_{n-1}`.
fn phi_model(w: &[f64], n: usize, r: &[f64], x: &[f64]) -> Option<(f64, Vec<f64>, Vec<f64>)> {
    let mut f = -r.iter().zip(x).map(|(a, b)| a * b).sum::<f64>();
    let mut g = alloc::vec![0.0; n];
    for k in 0..n {
        g[k] = -r[k];
    }
    let mut h = alloc::vec![0.0; n * n];
    let mut pi = alloc::vec![0.0; n];
    for j in 0..n {
        if r[j] == 0.0 {
            continue;
        }
        let m = (0..n)
            .filter(|&i| w[i * n + j] > 0.0)
            .map(|i| x[i])
            .fold(f64::NEG_INFINITY, f64::max);
        if m == f64::NEG_INFINITY {
            return None;
        }
        let mut s = 0.0;
        for i in 0..n {
            let wij = w[i * n + j];
            pi[i] = if wij > 0.0 { wij * libm::exp(x[i] - m) } else { 0.0 };
            s += pi[i];
        }
        f += r[j] * (m + libm::log(s));
        for i in 0..n {
            pi[i] /= s;
        }
        for k in 0..n {
            if pi[k] == 0.0 {
                continue;
            }
            g[k] += r[j] * pi[k];
            h[k * n + k] += r[j] * pi[k];
            for l in 0..n {
                h[k * n + l] -= r[j] * pi[k] * pi[l];
            }
        }
    }
    let m = n - 1;
    let gr = g[1..].to_vec();
    let mut hr = alloc::vec![0.0; m * m];
    for a in 0..m {
        for b in 0..m {
            hr[a * m + b] = h[(a + 1) * n + (b + 1)];
        }
    }
    Some((f, gr, hr))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independent_case_is_relative_entropy() {
        let p = StochasticMatrix::new(2, alloc::vec![0.5, 0.5, 0.5, 0.5]).unwrap();
        let r = Direction::new(alloc::vec![0.7, 0.3]).unwrap();
        let h = -(0.7 * libm::log(0.7) + 0.3 * libm::log(0.3));
        let i = sanov_rate(&p, &r, 1e-12).unwrap();
        assert!((i - (core::f64::consts::LN_2 - h)).abs() < 1e-8);
    }

    #[test]
    fn stationary_direction_has_zero_rate() {
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        let p = StochasticMatrix::new(2, alloc::vec![1.0 / phi, 1.0 / (phi * phi), 1.0, 0.0]).unwrap();
        let s5 = libm::sqrt(5.0);
        let r = Direction::new(alloc::vec![(5.0 + s5) / 10.0, (5.0 - s5) / 10.0]).unwrap();
        assert!(sanov_rate(&p, &r, 1e-12).unwrap().abs() < 1e-8);
    }

    #[test]
    fn forbidden_frequency_is_infinite() {
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        let p = StochasticMatrix::new(2, alloc::vec![1.0 / phi, 1.0 / (phi * phi), 1.0, 0.0]).unwrap();
        let r = Direction::new(alloc::vec![0.4, 0.6]).unwrap();
        assert_eq!(sanov_rate(&p, &r, 1e-12).unwrap(), f64::INFINITY);
    }
}
