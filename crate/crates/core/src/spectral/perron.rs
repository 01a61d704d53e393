use alloc::vec::Vec;

use super::SpectralError;
use crate::automaton::AdjacencyMatrix;

pub const DEFAULT_PERRON_TOL: f64 = 1e-14;
const MAX_ITER: usize = 200_000;

/// Perron root with positive eigenvectors: `Σ v = 1` and `⟨u, v⟩ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct PerronData {
    pub rho: f64,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
}

/// Power iteration on `A + I`, which has the same eigenvectors as `A` and a
/// strictly dominant eigenvalue even when `A` is periodic.
pub fn perron(a: &AdjacencyMatrix, tol: f64) -> Result<PerronData, SpectralError> {
    if !a.is_irreducible() {
        return Err(SpectralError::Reducible);
    }
    let n = a.size();
    let m = a.to_f64();
    let v = power(n, |i, j| m[i * n + j], tol)?;
    let u = power(n, |i, j| m[j * n + i], tol)?;
    let av: Vec<f64> = (0..n).map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum()).collect();
    let rho: f64 = av.iter().sum::<f64>() / v.iter().sum::<f64>();
    let uv: f64 = u.iter().zip(&v).map(|(x, y)| x * y).sum();
    let u = u.into_iter().map(|x| x / uv).collect();
    Ok(PerronData { rho, u, v })
}

fn power(n: usize, m: impl Fn(usize, usize) -> f64, tol: f64) -> Result<Vec<f64>, SpectralError> {
    let mut v = alloc::vec![1.0 / n as f64; n];
    let mut lambda = f64::NAN;
    for _ in 0..MAX_ITER {
        let mut w: Vec<f64> = (0..n)
            .map(|i| v[i] + (0..n).map(|j| m(i, j) * v[j]).sum::<f64>())
            .collect();
        let s: f64 = w.iter().sum();
        for x in w.iter_mut() {
            *x /= s;
        }
        let delta = w.iter().zip(&v).fold(0.0f64, |d, (a, b)| d.max((a - b).abs()));
        let settled = (s - lambda).abs() <= tol * s.max(1.0) && delta <= tol;
        v = w;
        lambda = s;
        if settled {
            return Ok(v);
        }
    }
    Err(SpectralError::NonConvergence)
}
