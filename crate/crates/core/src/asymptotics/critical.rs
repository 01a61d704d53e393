use alloc::vec::Vec;

use super::AsymptoticsError;
use crate::indicatrice::lagrange::LagrangeSystem;
use crate::indicatrice::{psi_boundary, symmetric_boundary_point, Direction};
use crate::polyalg::MultiPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPoint {
    pub z_star: Vec<f64>,
    pub lambda: f64,
    pub r: Vec<f64>,
    /// `h_r(z*) = -Σ r_i log z*_i`.
    pub height: f64,
    /// No other positive-real critical point found lies coordinate-wise below.
    pub minimal: bool,
}

/// `1 - z₁ - z₂ - 3 z₁ z₂`.
pub fn f2_denominator() -> MultiPoly {
    MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], -3)])
}

fn height(r: &[f64], z: &[f64]) -> f64 {
    -r.iter().zip(z).map(|(a, b)| a * libm::log(*b)).sum::<f64>()
}

/// Positive-real solutions of `λ z_i H_i(z) = r_i`, `H(z) = 0` from several
/// Newton starts, deduplicated and sorted by coordinates.
pub fn critical_points(h: &MultiPoly, r: &Direction, tol: f64) -> Result<Vec<CriticalPoint>, AsymptoticsError> {
    let d = h.nvars();
    if r.dim() != d {
        return Err(AsymptoticsError::Dimension {
            expected: d,
            found: r.dim(),
        });
    }
    if !r.is_interior() {
        return Err(AsymptoticsError::NotInterior);
    }
    let rv = r.as_slice();
    let mut starts: Vec<Vec<f64>> = Vec::new();
    if let Some(c) = symmetric_boundary_point(h) {
        starts.push(alloc::vec![-c; d]);
        for i in 0..d {
            for f in [0.5, 2.0] {
                let mut s = alloc::vec![-c; d];
                s[i] += libm::log(f);
                starts.push(s);
            }
        }
    }
    if let Ok(v) = psi_boundary(h, r, tol) {
        if let Some(theta) = v.minimizer {
            if theta.iter().all(|t| t.is_finite()) {
                starts.push(theta.iter().map(|t| -t).collect());
            }
        }
    }
    let sys = LagrangeSystem::new(h);
    let mut found: Vec<CriticalPoint> = Vec::new();
    for x0 in &starts {
        let Some(sol) = sys.solve(rv, x0, tol.max(1e-13)) else {
            continue;
        };
        if h.eval(&sol.z).abs() >= 1e-10 {
            continue;
        }
        let dup = found
            .iter()
            .any(|p| p.z_star.iter().zip(&sol.z).all(|(a, b)| (a - b).abs() <= 1e-8 * (1.0 + a.abs())));
        if !dup {
            found.push(CriticalPoint {
                height: height(rv, &sol.z),
                z_star: sol.z,
                lambda: sol.lambda,
                r: rv.to_vec(),
                minimal: true,
            });
        }
    }
    if found.is_empty() {
        return Err(AsymptoticsError::NoConvergentStart);
    }
    found.sort_by(|a, b| a.z_star.partial_cmp(&b.z_star).expect("finite coordinates"));
    let snapshot: Vec<Vec<f64>> = found.iter().map(|p| p.z_star.clone()).collect();
    for (k, p) in found.iter_mut().enumerate() {
        p.minimal = !snapshot
            .iter()
            .enumerate()
            .any(|(j, w)| j != k && w.iter().zip(&p.z_star).all(|(a, b)| a <= b));
    }
    Ok(found)
}

/// Minimal critical point of `1 - z₁ - z₂ - 3 z₁ z₂` in direction `(p, 1 - p)`.
pub fn f2_critical_closed(p: f64) -> Result<CriticalPoint, AsymptoticsError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(AsymptoticsError::Parameter("p must lie in (0, 1)"));
    }
    let root = libm::sqrt(3.0 * p * p - 3.0 * p + 1.0);
    let x = (3.0 * p - 2.0 + 2.0 * root) / (3.0 * p);
    let y = (1.0 - 3.0 * p + 2.0 * root) / (3.0 * (1.0 - p));
    let h = f2_denominator();
    let z = alloc::vec![x, y];
    let hv = h.eval(&z);
    if hv.abs() > 1e-12 {
        return Err(AsymptoticsError::NotOnVariety(hv));
    }
    let r = alloc::vec![p, 1.0 - p];
    let g = h.gradient(&z);
    Ok(CriticalPoint {
        lambda: p / (x * g[0]),
        height: height(&r, &z),
        z_star: z,
        r,
        minimal: true,
    })
}

/// `(xy + 3x²y + 3xy² + x²) / (y²(1 + 3x)²)` at a point of the F₂ variety.
pub fn hessian_scalar_f2(z: &[f64]) -> Result<f64, AsymptoticsError> {
    if z.len() != 2 {
        return Err(AsymptoticsError::Dimension {
            expected: 2,
            found: z.len(),
        });
    }
    let (x, y) = (z[0], z[1]);
    if !(x > 0.0 && y > 0.0) {
        return Err(AsymptoticsError::Parameter("point must have positive coordinates"));
    }
    let hv = f2_denominator().eval(z);
    if hv.abs() > 1e-8 {
        return Err(AsymptoticsError::NotOnVariety(hv));
    }
    let t = 1.0 + 3.0 * x;
    Ok((x * y + 3.0 * x * x * y + 3.0 * x * y * y + x * x) / (y * y * t * t))
}
