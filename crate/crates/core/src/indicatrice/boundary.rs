use alloc::vec::Vec;

use super::lagrange::LagrangeSystem;
use super::{Direction, ExtendedValue, IndicatriceError, Method};
use crate::numeric::{bisect, minimize_convex, NewtonOptions, Outcome};
use crate::polyalg::{big_to_f64, MultiPoly};

/// `c` with `H(e^{-c}, …, e^{-c}) = 0`, scanning from large `c` (where
/// `H ≈ H(0) = 1`) downward for the first sign change.
pub fn symmetric_boundary_point(h: &MultiPoly) -> Option<f64> {
    let d = h.nvars();
    let f = |c: f64| h.eval(&alloc::vec![libm::exp(-c); d]);
    let mut hi = 30.0;
    let mut fhi = f(hi);
    if !(fhi > 0.0) {
        return None;
    }
    let mut lo = hi;
    while lo > -30.0 {
        lo -= 0.25;
        let flo = f(lo);
        if flo == 0.0 {
            return Some(lo);
        }
        if flo < 0.0 {
            return Some(bisect(f, lo, hi, 200));
        }
        hi = lo;
        fhi = flo;
    }
    let _ = fhi;
    None
}

pub fn psi_boundary(h: &MultiPoly, r: &Direction, tol: f64) -> Result<ExtendedValue, IndicatriceError> {
    psi_boundary_seeded(h, r, tol, None)
}

/// As [`psi_boundary`], starting from the boundary point `θ = seed`.
pub fn psi_boundary_seeded(
    h: &MultiPoly,
    r: &Direction,
    tol: f64,
    seed: Option<&[f64]>,
) -> Result<ExtendedValue, IndicatriceError> {
    let d = h.nvars();
    if r.dim() != d {
        return Err(IndicatriceError::Dimension {
            expected: d,
            found: r.dim(),
        });
    }
    if let Some(s) = seed {
        if s.len() != d {
            return Err(IndicatriceError::Dimension {
                expected: d,
                found: s.len(),
            });
        }
    }
    if h.is_one_minus_positive() {
        reduced(h, r.as_slice(), tol, seed)
    } else {
        lagrange(h, r.as_slice(), tol, seed)
    }
}

struct Face {
    active: Vec<usize>,
    /// Exponent vectors on the active variables, as reals.
    k: Vec<Vec<f64>>,
    k_total: Vec<f64>,
    log_c: Vec<f64>,
}

impl Face {
    /// `c` solving `log Σ c_k e^{-⟨k, ŷ⟩ - |k| c} = 0`, by monotone Newton from
    /// the left of the root.
    fn solve_c(&self, yhat: &[f64]) -> f64 {
        let l: Vec<f64> = (0..self.k.len())
            .map(|t| self.log_c[t] - self.k[t].iter().zip(yhat).map(|(a, b)| a * b).sum::<f64>())
            .collect();
        let mut c = (0..l.len())
            .map(|t| l[t] / self.k_total[t])
            .fold(f64::NEG_INFINITY, f64::max);
        for _ in 0..200 {
            let m = (0..l.len())
                .map(|t| l[t] - self.k_total[t] * c)
                .fold(f64::NEG_INFINITY, f64::max);
            let mut s = 0.0;
            let mut ds = 0.0;
            for t in 0..l.len() {
                let e = libm::exp(l[t] - self.k_total[t] * c - m);
                s += e;
                ds += self.k_total[t] * e;
            }
            let phi = m + libm::log(s);
            let step = phi / (ds / s);
            c += step;
            if step.abs() <= 1e-16 * (1.0 + c.abs()) {
                break;
            }
        }
        c
    }

    /// Objective `⟨r, θ⟩` with `θ = (y, 0) + c(y)·1`, its gradient and Hessian in `y`.
    fn model(&self, r: &[f64], y: &[f64]) -> Option<(f64, Vec<f64>, Vec<f64>)> {
        let n = self.active.len();
        let m = n - 1;
        let mut yhat = y.to_vec();
        yhat.push(0.0);
        let c = self.solve_c(&yhat);
        if !c.is_finite() {
            return None;
        }
        let f = (0..m).map(|a| r[a] * y[a]).sum::<f64>() + c;
        let ex: Vec<f64> = (0..self.k.len())
            .map(|t| {
                self.log_c[t]
                    - self.k[t].iter().zip(&yhat).map(|(a, b)| a * b).sum::<f64>()
                    - self.k_total[t] * c
            })
            .collect();
        let mx = ex.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut w: Vec<f64> = ex.iter().map(|e| libm::exp(e - mx)).collect();
        let s: f64 = w.iter().sum();
        for v in w.iter_mut() {
            *v /= s;
        }
        let mut kbar = alloc::vec![0.0; n];
        let mut total = 0.0;
        for t in 0..w.len() {
            for a in 0..n {
                kbar[a] += w[t] * self.k[t][a];
            }
            total += w[t] * self.k_total[t];
        }
        let ca: Vec<f64> = (0..m).map(|a| -kbar[a] / total).collect();
        let g: Vec<f64> = (0..m).map(|a| r[a] + ca[a]).collect();
        let mut hess = alloc::vec![0.0; m * m];
        let mut proj = alloc::vec![0.0; m];
        for t in 0..w.len() {
            for a in 0..m {
                proj[a] = (self.k[t][a] - kbar[a]) + ca[a] * (self.k_total[t] - total);
            }
            for a in 0..m {
                for b in 0..m {
                    hess[a * m + b] += w[t] * proj[a] * proj[b] / total;
                }
            }
        }
        Some((f, g, hess))
    }
}

fn reduced(h: &MultiPoly, r: &[f64], tol: f64, seed: Option<&[f64]>) -> Result<ExtendedValue, IndicatriceError> {
    let d = h.nvars();
    let active: Vec<usize> = (0..d).filter(|&i| r[i] > 0.0).collect();
    let mut k = Vec::new();
    let mut k_total = Vec::new();
    let mut log_c = Vec::new();
    for (mono, coef) in h.terms() {
        if mono.is_one() {
            continue;
        }
        let e = mono.exponents();
        if (0..d).any(|i| r[i] == 0.0 && e[i] > 0) {
            continue;
        }
        let kv: Vec<f64> = active.iter().map(|&i| e[i] as f64).collect();
        k_total.push(kv.iter().sum());
        k.push(kv);
        log_c.push(libm::log(-big_to_f64(coef)));
    }
    // H is constant on the face, or some active variable never appears: the
    // series is entire along the face.
    if k.is_empty() || (0..active.len()).any(|a| k.iter().all(|kv| kv[a] == 0.0)) {
        return Ok(ExtendedValue::neg_infinity(Method::Boundary));
    }
    let face = Face {
        active,
        k,
        k_total,
        log_c,
    };
    let ra: Vec<f64> = face.active.iter().map(|&i| r[i]).collect();
    let n = face.active.len();
    let y0: Vec<f64> = match seed {
        Some(s) if s.iter().all(|v| v.is_finite()) => {
            let last = s[face.active[n - 1]];
            face.active[..n - 1].iter().map(|&i| s[i] - last).collect()
        }
        _ => alloc::vec![0.0; n - 1],
    };
    let opts = NewtonOptions {
        gtol: tol,
        ..NewtonOptions::default()
    };
    match minimize_convex(|y| face.model(&ra, y), &y0, &opts) {
        Ok(Outcome::Converged { x, f, .. }) => {
            let mut yhat = x;
            yhat.push(0.0);
            let c = face.solve_c(&yhat);
            let mut theta = alloc::vec![f64::INFINITY; d];
            for (a, &i) in face.active.iter().enumerate() {
                theta[i] = yhat[a] + c;
            }
            Ok(ExtendedValue::finite(f, Some(theta), Method::Boundary))
        }
        Ok(Outcome::Unbounded { .. }) => Ok(ExtendedValue::neg_infinity(Method::Boundary)),
        Err(_) => Err(IndicatriceError::NonConvergence),
    }
}

fn lagrange(h: &MultiPoly, r: &[f64], tol: f64, seed: Option<&[f64]>) -> Result<ExtendedValue, IndicatriceError> {
    let d = h.nvars();
    if r.contains(&0.0) {
        return lagrange_face(h, r, tol, seed);
    }
    let x0: Vec<f64> = match seed {
        Some(s) => s.iter().map(|v| -v).collect(),
        None => {
            let c = symmetric_boundary_point(h).ok_or(IndicatriceError::UnsupportedDenominator)?;
            alloc::vec![-c; d]
        }
    };
    let sys = LagrangeSystem::new(h);
    let sol = sys
        .solve(r, &x0, tol.max(1e-13))
        .ok_or(IndicatriceError::NonConvergence)?;
    let theta: Vec<f64> = sol.z.iter().map(|z| -libm::log(*z)).collect();
    let value = theta.iter().zip(r).map(|(a, b)| a * b).sum();
    Ok(ExtendedValue::finite(value, Some(theta), Method::Boundary))
}

/// On the face `r_i = 0` for `i ∉ active`, the optimum sends `z_i → 0`:
/// solve the problem for `H` with those variables set to zero.
fn lagrange_face(
    h: &MultiPoly,
    r: &[f64],
    tol: f64,
    seed: Option<&[f64]>,
) -> Result<ExtendedValue, IndicatriceError> {
    let d = h.nvars();
    let active: Vec<usize> = (0..d).filter(|&i| r[i] > 0.0).collect();
    let mut restricted = h.clone();
    let mut map = alloc::vec![0; d];
    for i in 0..d {
        match active.iter().position(|&a| a == i) {
            Some(a) => map[i] = a,
            None => restricted = restricted.restrict_zero(i),
        }
    }
    let hf = restricted.relabel(&map, active.len());
    let mut theta = alloc::vec![f64::INFINITY; d];
    if active.len() == 1 {
        return Ok(match symmetric_boundary_point(&hf) {
            Some(c) => {
                theta[active[0]] = c;
                ExtendedValue::finite(c, Some(theta), Method::Boundary)
            }
            None => ExtendedValue::neg_infinity(Method::Boundary),
        });
    }
    let rf: Vec<f64> = active.iter().map(|&i| r[i]).collect();
    let sf: Option<Vec<f64>> = seed
        .map(|s| active.iter().map(|&i| s[i]).collect::<Vec<f64>>())
        .filter(|s| s.iter().all(|v| v.is_finite()));
    let sub = psi_boundary_seeded(&hf, &Direction::new(rf)?, tol, sf.as_deref())?;
    let Some(th) = sub.minimizer else {
        return Ok(sub);
    };
    for (a, &i) in active.iter().enumerate() {
        theta[i] = th[a];
    }
    Ok(ExtendedValue::finite(sub.value, Some(theta), Method::Boundary))
}
