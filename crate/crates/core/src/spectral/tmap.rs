use alloc::vec::Vec;

use super::perron::{perron, DEFAULT_PERRON_TOL};
use super::SpectralError;
use crate::automaton::AdjacencyMatrix;
use crate::indicatrice::Direction;
use crate::numeric::determinant;

/// `s = T(q)` and the auxiliary vector `t_j = q_j / v_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct TMap {
    pub s: Vec<f64>,
    pub t: Vec<f64>,
}

/// `s_j = q_j / (v_j Σ_i q_i a_ij / v_i)`.
pub fn t_map(a: &AdjacencyMatrix, q: &Direction) -> Result<TMap, SpectralError> {
    let n = a.size();
    check(a, q)?;
    let v = perron(a, DEFAULT_PERRON_TOL)?.v;
    let t: Vec<f64> = q.as_slice().iter().zip(&v).map(|(qj, vj)| qj / vj).collect();
    let s = (0..n)
        .map(|j| {
            let ta: f64 = (0..n).map(|i| t[i] * a.get(i, j) as f64).sum();
            t[j] / ta
        })
        .collect();
    Ok(TMap { s, t })
}

fn check(a: &AdjacencyMatrix, q: &Direction) -> Result<(), SpectralError> {
    if q.dim() != a.size() {
        return Err(SpectralError::Dimension {
            expected: a.size(),
            found: q.dim(),
        });
    }
    if !q.is_interior() {
        return Err(SpectralError::NotInterior);
    }
    for i in 0..a.size() {
        for j in 0..a.size() {
            if a.get(i, j) > 1 {
                return Err(SpectralError::NotZeroOne(i, j));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct TIdentityReport {
    /// `‖t A(s) - t‖∞`.
    pub fixed_point_residual: f64,
    /// `|det(I - A(s))|`.
    pub det_residual: f64,
    pub pass: bool,
}

/// Checks `t A(s) = t` and `det(I - A(s)) = 0`, where `A(s)` replaces each
/// 1 in column `j` of `A` by `s_j`.
pub fn verify_t_identities(a: &AdjacencyMatrix, q: &Direction) -> Result<TIdentityReport, SpectralError> {
    let TMap { s, t } = t_map(a, q)?;
    let n = a.size();
    let mut m = alloc::vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let as_ij = a.get(i, j) as f64 * s[j];
            m[i * n + j] = if i == j { 1.0 } else { 0.0 } - as_ij;
        }
    }
    let fixed_point_residual = (0..n)
        .map(|j| {
            let v: f64 = (0..n).map(|i| t[i] * a.get(i, j) as f64 * s[j]).sum();
            (v - t[j]).abs()
        })
        .fold(0.0, f64::max);
    let det_residual = determinant(&m, n).abs();
    Ok(TIdentityReport {
        fixed_point_residual,
        det_residual,
        pass: fixed_point_residual < 1e-12 && det_residual < 1e-10,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_example() {
        let a = AdjacencyMatrix::from_rows(&[&[1, 1], &[1, 0]]);
        let q = Direction::new(alloc::vec![2.0 / 3.0, 1.0 / 3.0]).unwrap();
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        let m = t_map(&a, &q).unwrap();
        // s = (q1/(q1 + φ q2), φ q2 / q1)
        assert!((m.s[0] - 2.0 / (2.0 + phi)).abs() < 1e-14);
        assert!((m.s[1] - phi / 2.0).abs() < 1e-14);
        assert!(verify_t_identities(&a, &q).unwrap().pass);
    }

    #[test]
    fn trivial_matrix() {
        let a = AdjacencyMatrix::from_rows(&[&[1]]);
        let q = Direction::new(alloc::vec![1.0]).unwrap();
        assert_eq!(t_map(&a, &q).unwrap().s, alloc::vec![1.0]);
    }
}
