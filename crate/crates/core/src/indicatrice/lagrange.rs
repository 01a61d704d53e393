//! Newton solver for the critical-point system `λ z_i H_i(z) = r_i`, `H(z) = 0`,
//! in logarithmic coordinates `x = log z`.

use alloc::vec::Vec;

use crate::numeric::{norm_inf, solve_linear};
use crate::polyalg::MultiPoly;

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct LagrangeSolution {
    pub z: Vec<f64>,
    pub lambda: f64,
    pub residual: f64,
}

pub(crate) struct LagrangeSystem {
    h: MultiPoly,
    grad: Vec<MultiPoly>,
    hess: Vec<Vec<MultiPoly>>,
}

impl LagrangeSystem {
    pub fn new(h: &MultiPoly) -> Self {
        let d = h.nvars();
        let grad: Vec<MultiPoly> = (0..d).map(|i| h.derivative(i)).collect();
        let hess = grad.iter().map(|g| (0..d).map(|j| g.derivative(j)).collect()).collect();
        LagrangeSystem {
            h: h.clone(),
            grad,
            hess,
        }
    }

    fn residual(&self, x: &[f64], lambda: f64, r: &[f64]) -> Vec<f64> {
        let z: Vec<f64> = x.iter().map(|v| libm::exp(*v)).collect();
        let mut f: Vec<f64> = (0..z.len())
            .map(|i| lambda * z[i] * self.grad[i].eval(&z) - r[i])
            .collect();
        f.push(self.h.eval(&z));
        f
    }

    fn jacobian(&self, x: &[f64], lambda: f64) -> Vec<f64> {
        let d = x.len();
        let n = d + 1;
        let z: Vec<f64> = x.iter().map(|v| libm::exp(*v)).collect();
        let g: Vec<f64> = self.grad.iter().map(|p| p.eval(&z)).collect();
        let mut j = alloc::vec![0.0; n * n];
        for i in 0..d {
            for k in 0..d {
                let mut v = z[i] * z[k] * self.hess[i][k].eval(&z);
                if i == k {
                    v += z[i] * g[i];
                }
                j[i * n + k] = lambda * v;
            }
            j[i * n + d] = z[i] * g[i];
            j[d * n + i] = z[i] * g[i];
        }
        j
    }

    /// Damped Newton from `x0 = log z0`. `None` when the iteration stalls or
    /// leaves the positive orthant numerically.
    pub fn solve(&self, r: &[f64], x0: &[f64], tol: f64) -> Option<LagrangeSolution> {
        let d = x0.len();
        let mut x = x0.to_vec();
        let z0: Vec<f64> = x.iter().map(|v| libm::exp(*v)).collect();
        let zg: Vec<f64> = (0..d).map(|i| z0[i] * self.grad[i].eval(&z0)).collect();
        let den: f64 = zg.iter().map(|v| v * v).sum();
        let mut lambda = if den > 0.0 {
            zg.iter().zip(r).map(|(a, b)| a * b).sum::<f64>() / den
        } else {
            1.0
        };
        let mut f = self.residual(&x, lambda, r);
        for _ in 0..200 {
            let fn0 = norm_inf(&f);
            if !fn0.is_finite() {
                return None;
            }
            if fn0 <= tol {
                let z = x.iter().map(|v| libm::exp(*v)).collect();
                return Some(LagrangeSolution {
                    z,
                    lambda,
                    residual: fn0,
                });
            }
            let jac = self.jacobian(&x, lambda);
            let rhs: Vec<f64> = f.iter().map(|v| -v).collect();
            let step = solve_linear(&jac, &rhs)?;
            let merit = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>();
            let m0 = merit(&f);
            let mut t = 1.0;
            let mut accepted = false;
            for _ in 0..50 {
                let xt: Vec<f64> = x.iter().zip(&step).map(|(a, b)| a + t * b).collect();
                let lt = lambda + t * step[d];
                let ft = self.residual(&xt, lt, r);
                if merit(&ft) < (1.0 - 1e-4 * t) * m0 {
                    x = xt;
                    lambda = lt;
                    f = ft;
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if !accepted {
                let fin = norm_inf(&f);
                if fin <= tol.max(1e-11) {
                    let z = x.iter().map(|v| libm::exp(*v)).collect();
                    return Some(LagrangeSolution {
                        z,
                        lambda,
                        residual: fin,
                    });
                }
                return None;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_case() {
        let h = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1)]);
        let sys = LagrangeSystem::new(&h);
        let s = sys.solve(&[0.3, 0.7], &[-1.0, -1.0], 1e-13).unwrap();
        assert!((s.z[0] - 0.3).abs() < 1e-12 && (s.z[1] - 0.7).abs() < 1e-12);
    }
}
