//! Small dense numerical helpers shared by the analytic modules.

use alloc::vec::Vec;

use nalgebra::DMatrix;

/// Solves `a x = b` in place by Gaussian elimination with partial pivoting.
/// `a` is row-major `n x n`. Returns `None` for a numerically singular system.
pub fn solve_linear(a: &[f64], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    debug_assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    let scale = m.iter().fold(0.0f64, |s, v| s.max(v.abs())).max(f64::MIN_POSITIVE);
    for k in 0..n {
        let (p, pv) = (k..n)
            .map(|r| (r, m[r * n + k].abs()))
            .fold((k, -1.0), |best, c| if c.1 > best.1 { c } else { best });
        if pv <= 1e-300 || pv <= scale * 1e-15 {
            return None;
        }
        if p != k {
            for c in 0..n {
                m.swap(k * n + c, p * n + c);
            }
            x.swap(k, p);
        }
        let d = m[k * n + k];
        for r in k + 1..n {
            let f = m[r * n + k] / d;
            if f == 0.0 {
                continue;
            }
            for c in k..n {
                m[r * n + c] -= f * m[k * n + c];
            }
            x[r] -= f * x[k];
        }
    }
    for k in (0..n).rev() {
        let mut s = x[k];
        for c in k + 1..n {
            s -= m[k * n + c] * x[c];
        }
        x[k] = s / m[k * n + k];
    }
    Some(x)
}

/// Determinant of a small row-major matrix.
pub fn determinant(a: &[f64], n: usize) -> f64 {
    DMatrix::from_row_slice(n, n, a).determinant()
}

pub(crate) fn norm_inf(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |s, x| s.max(x.abs()))
}

pub(crate) fn norm2(v: &[f64]) -> f64 {
    let m = norm_inf(v);
    if m == 0.0 || !m.is_finite() {
        return m;
    }
    m * libm::sqrt(v.iter().map(|x| (x / m) * (x / m)).sum())
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Value, gradient and row-major Hessian at a point.
pub(crate) type Model = (f64, Vec<f64>, Vec<f64>);

#[derive(Clone, Copy, Debug)]
pub(crate) struct NewtonOptions {
    pub gtol: f64,
    pub max_iter: usize,
    pub initial_radius: f64,
    /// Minimum decrease of one full trust-region step counted toward divergence.
    pub divergence_step: f64,
    /// Successive radius doublings with such decreases that certify unboundedness.
    pub divergence_count: usize,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions {
            gtol: 1e-12,
            max_iter: 500,
            initial_radius: 1.0,
            divergence_step: 1e-3,
            divergence_count: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Outcome {
    Converged { x: Vec<f64>, f: f64, iterations: usize },
    Unbounded { x: Vec<f64>, f: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum NewtonFailure {
    Undefined,
    NoProgress,
    IterationLimit,
}

/// Damped Newton with a trust region for a smooth convex function.
///
/// The radius doubles whenever a full capped step is accepted. Ten such
/// doublings in a row, each lowering the objective by more than
/// `divergence_step`, are taken as proof that the function is unbounded below.
pub(crate) fn minimize_convex<F>(model: F, x0: &[f64], opts: &NewtonOptions) -> Result<Outcome, NewtonFailure>
where
    F: Fn(&[f64]) -> Option<Model>,
{
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut radius = opts.initial_radius;
    let mut streak = 0;
    if n == 0 {
        let (f, _, _) = model(&x).ok_or(NewtonFailure::Undefined)?;
        return Ok(Outcome::Converged { x, f, iterations: 0 });
    }
    for iteration in 0..opts.max_iter {
        let (f, g, h) = model(&x).ok_or(NewtonFailure::Undefined)?;
        if !f.is_finite() {
            return Err(NewtonFailure::Undefined);
        }
        let gn = norm_inf(&g);
        if gn <= opts.gtol {
            return Ok(Outcome::Converged { x, f, iterations: iteration });
        }
        let mut p = descent_direction(&g, &h, n);
        let mut capped = false;
        let len = norm2(&p);
        if len > radius {
            for v in p.iter_mut() {
                *v *= radius / len;
            }
            capped = true;
        }
        let slope = dot(&g, &p);
        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..60 {
            let trial: Vec<f64> = x.iter().zip(&p).map(|(a, b)| a + t * b).collect();
            if let Some((ft, _, _)) = model(&trial) {
                if ft.is_finite() && ft <= f + 1e-4 * t * slope {
                    accepted = Some((trial, ft));
                    break;
                }
            }
            t *= 0.5;
        }
        let Some((next, fnext)) = accepted else {
            // roundoff floor: no representable decrease left
            if gn <= 1e-7 * (1.0 + f.abs()) {
                return Ok(Outcome::Converged { x, f, iterations: iteration });
            }
            return Err(NewtonFailure::NoProgress);
        };
        if fnext >= f && gn <= 1e-7 * (1.0 + f.abs()) {
            return Ok(Outcome::Converged { x, f, iterations: iteration });
        }
        if capped && t == 1.0 {
            radius *= 2.0;
            if f - fnext > opts.divergence_step {
                streak += 1;
                if streak >= opts.divergence_count {
                    return Ok(Outcome::Unbounded { x: next, f: fnext });
                }
            } else {
                streak = 0;
            }
        } else {
            streak = 0;
        }
        let moved = x.iter().zip(&next).any(|(a, b)| a != b);
        x = next;
        if !moved {
            return Ok(Outcome::Converged { x, f: fnext, iterations: iteration });
        }
    }
    Err(NewtonFailure::IterationLimit)
}

/// Newton direction, regularized until it is a descent direction.
fn descent_direction(g: &[f64], h: &[f64], n: usize) -> Vec<f64> {
    let diag = (0..n).fold(0.0f64, |s, i| s.max(h[i * n + i].abs()));
    let mut mu = 0.0;
    for _ in 0..80 {
        let mut hm = h.to_vec();
        for i in 0..n {
            hm[i * n + i] += mu;
        }
        let rhs: Vec<f64> = g.iter().map(|v| -v).collect();
        if let Some(p) = solve_linear(&hm, &rhs) {
            let s = dot(g, &p);
            if s < 0.0 && p.iter().all(|v| v.is_finite()) {
                return p;
            }
        }
        mu = if mu == 0.0 { 1e-12 * (1.0 + diag) } else { mu * 4.0 };
    }
    g.iter().map(|v| -v).collect()
}

/// Bisection for a sign change of `f` on `[lo, hi]`.
pub(crate) fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iterations: usize) -> f64 {
    let mut flo = f(lo);
    for _ in 0..iterations {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Maximizer of a unimodal function on `[lo, hi]` by golden-section search.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let g = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut c = hi - g * (hi - lo);
    let mut d = lo + g * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    while hi - lo > tol {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// Real roots of `c[0] + c[1] x + ... + c[n] x^n`, from the eigenvalues of
/// the companion matrix followed by Newton polishing, in ascending order.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|&v| v == 0.0) {
        c.pop();
    }
    let mut out = Vec::new();
    while c.len() > 1 && c[0] == 0.0 {
        out.push(0.0);
        c.remove(0);
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return out;
    }
    let lead = c[n];
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i] / lead;
    }
    for z in m.complex_eigenvalues().iter() {
        let scale = 1.0 + z.re.abs();
        if z.im.abs() <= 1e-7 * scale {
            out.push(polish(&c, z.re));
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    out.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + b.abs()));
    out
}

pub(crate) fn horner(c: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &a in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp)
}

fn polish(c: &[f64], mut x: f64) -> f64 {
    for _ in 0..8 {
        let (p, dp) = horner(c, x);
        if dp == 0.0 {
            break;
        }
        let step = p / dp;
        let nx = x - step;
        if !nx.is_finite() {
            break;
        }
        if horner(c, nx).0.abs() > p.abs() {
            break;
        }
        x = nx;
        if step.abs() <= 1e-17 * (1.0 + x.abs()) {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_solve() {
        let x = solve_linear(&[0.0, 2.0, 3.0, 1.0], &[4.0, 5.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-15 && (x[1] - 2.0).abs() < 1e-15);
        assert!(solve_linear(&[1.0, 2.0, 2.0, 4.0], &[1.0, 1.0]).is_none());
    }

    #[test]
    fn quartic_roots() {
        // 3z^4 + 4z^3 - 62z^2 - 156z - 45 has the single positive root 5
        let r = real_roots(&[-45.0, -156.0, -62.0, 4.0, 3.0]);
        let pos: Vec<f64> = r.into_iter().filter(|&x| x > 0.0).collect();
        assert_eq!(pos.len(), 1);
        assert!((pos[0] - 5.0).abs() < 1e-13);
        assert_eq!(real_roots(&[0.0, 0.0, 1.0]), alloc::vec![0.0, 0.0]);
    }

    #[test]
    fn quadratic_minimum() {
        let model = |x: &[f64]| {
            let f = (x[0] - 1.0).powi(2) + 2.0 * (x[1] + 3.0).powi(2);
            Some((f, alloc::vec![2.0 * (x[0] - 1.0), 4.0 * (x[1] + 3.0)], alloc::vec![2.0, 0.0, 0.0, 4.0]))
        };
        match minimize_convex(model, &[10.0, 10.0], &NewtonOptions::default()).unwrap() {
            Outcome::Converged { x, .. } => {
                assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] + 3.0).abs() < 1e-12)
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn linear_descent_is_unbounded() {
        let model = |x: &[f64]| {
            let e = libm::exp(-x[0]);
            Some((e - 0.1 * x[0], alloc::vec![-e - 0.1], alloc::vec![e]))
        };
        let o = minimize_convex(model, &[0.0], &NewtonOptions::default()).unwrap();
        assert!(matches!(o, Outcome::Unbounded { .. }), "{o:?}");
    }

    #[test]
    fn golden_section() {
        let (x, v) = golden_section_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-8 && v.abs() < 1e-15);
    }
}
