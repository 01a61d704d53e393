use alloc::vec::Vec;

use super::perron::{perron, PerronData, DEFAULT_PERRON_TOL};
use super::{SpectralError, StochasticMatrix};
use crate::automaton::AdjacencyMatrix;

/// Perron data together with the Parry chain and its stationary law.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    pub rho: f64,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub p: StochasticMatrix,
    pub stationary: Vec<f64>,
    a: AdjacencyMatrix,
}

/// `P_ij = a_ij v_j / (ρ v_i)` with its stationary vector from power iteration.
pub fn parry(a: &AdjacencyMatrix) -> Result<SpectralData, SpectralError> {
    let n = a.size();
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) > 1 {
                return Err(SpectralError::NotZeroOne(i, j));
            }
        }
    }
    let PerronData { rho, u, v } = perron(a, DEFAULT_PERRON_TOL)?;
    let mut data = alloc::vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) == 1 {
                data[i * n + j] = v[j] / (rho * v[i]);
            }
        }
    }
    let p = StochasticMatrix { n, data };
    let stationary = stationary(&p)?;
    Ok(SpectralData {
        rho,
        u,
        v,
        p,
        stationary,
        a: a.clone(),
    })
}

fn stationary(p: &StochasticMatrix) -> Result<Vec<f64>, SpectralError> {
    let n = p.size();
    let mut x = alloc::vec![1.0 / n as f64; n];
    for _ in 0..1_000_000 {
        // lazy chain (P + I) / 2 to avoid periodic oscillation
        let mut y: Vec<f64> = (0..n)
            .map(|j| 0.5 * x[j] + 0.5 * (0..n).map(|i| x[i] * p.get(i, j)).sum::<f64>())
            .collect();
        let s: f64 = y.iter().sum();
        for v in y.iter_mut() {
            *v /= s;
        }
        let delta: f64 = y.iter().zip(&x).map(|(a, b)| (a - b).abs()).sum();
        x = y;
        if delta <= 1e-16 {
            return Ok(x);
        }
    }
    Err(SpectralError::NonConvergence)
}

impl SpectralData {
    pub fn adjacency(&self) -> &AdjacencyMatrix {
        &self.a
    }

    /// Parry measure of the cylinder spelled by the state path
    /// `[i, w_1, ..., w_{n-1}, j]`: `p_i v_j / (v_i ρ^n)`, zero if the path
    /// uses a missing edge.
    pub fn cylinder_measure(&self, path: &[usize]) -> f64 {
        let Some((&i, rest)) = path.split_first() else {
            return 1.0;
        };
        let mut prev = i;
        for &s in rest {
            if self.a.get(prev, s) == 0 {
                return 0.0;
            }
            prev = s;
        }
        let n = rest.len() as i32;
        self.stationary[i] * self.v[prev] / (self.v[i] * libm::pow(self.rho, f64::from(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_chain() {
        let d = parry(&AdjacencyMatrix::from_rows(&[&[1, 1], &[1, 0]])).unwrap();
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        assert!((d.p.get(0, 0) - 1.0 / phi).abs() < 1e-12);
        assert!((d.p.get(0, 1) - 1.0 / (phi * phi)).abs() < 1e-12);
        assert!((d.p.get(1, 0) - 1.0).abs() < 1e-12);
        let s5 = libm::sqrt(5.0);
        assert!((d.stationary[0] - (5.0 + s5) / 10.0).abs() < 1e-12);
        assert!((d.stationary[1] - (5.0 - s5) / 10.0).abs() < 1e-12);
    }

    #[test]
    fn trivial_and_rejected() {
        let d = parry(&AdjacencyMatrix::from_rows(&[&[1]])).unwrap();
        assert_eq!(d.p.get(0, 0), 1.0);
        assert_eq!(d.stationary, alloc::vec![1.0]);
        assert_eq!(
            parry(&AdjacencyMatrix::from_rows(&[&[2]])),
            Err(SpectralError::NotZeroOne(0, 0))
        );
    }

    #[test]
    fn cylinders_of_one_length_sum_to_one() {
        let d = parry(&AdjacencyMatrix::from_rows(&[&[1, 1], &[1, 0]])).unwrap();
        let mut total = 0.0;
        for w in 0..8usize {
            let path: alloc::vec::Vec<usize> = (0..3).map(|k| (w >> k) & 1).collect();
            total += d.cylinder_measure(&path);
        }
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(d.cylinder_measure(&[1, 1]), 0.0);
    }
}
