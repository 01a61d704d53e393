use langrowth_core::automaton::{catalog_automaton, CatalogName};
use langrowth_core::indicatrice::{
    amoeba_slice, psi_boundary, psi_boundary_seeded, psi_closed_form, psi_empirical, psi_tmap, shannon_entropy,
    ClosedForm, Direction, ExtendedValue, DEFAULT_CONE_EPS,
};
use langrowth_core::polyalg::MultiPoly;
use langrowth_core::series::{coefficients_dp, coefficients_dp_with, TableMode, VariableMap};
use langrowth_core::spectral::perron;
use proptest::prelude::*;

const LN_PHI: f64 = 0.481_211_825_059_603_4;

fn fib_h() -> MultiPoly {
    MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], -1)])
}

fn f2_h() -> MultiPoly {
    MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], -3)])
}

fn monoid_h(d: usize) -> MultiPoly {
    let mut p = MultiPoly::one(d);
    for i in 0..d {
        p = &p - &MultiPoly::var(d, i);
    }
    p
}

fn dir(v: &[f64]) -> Direction {
    Direction::new(v.to_vec()).unwrap()
}

fn grid() -> Vec<f64> {
    (1..=21).map(|k| k as f64 / 22.0).collect()
}

/// Brute-force infimum of `⟨r, θ⟩` along the boundary curve of a bivariate
/// `H`, parametrized by `s = θ₁`, by dense sampling plus golden refinement.
fn curve_minimum(h: &MultiPoly, p: f64, s_lo: f64, s_hi: f64) -> f64 {
    let value = |s: f64| {
        let x = (-s).exp();
        let g = |w: f64| h.eval(&[x, w]);
        let (mut lo, mut hi) = (0.0, 1.0);
        while g(hi) > 0.0 {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        p * s - (1.0 - p) * (0.5 * (lo + hi)).ln()
    };
    let n = 4000;
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..=n {
        let s = s_lo + (s_hi - s_lo) * k as f64 / n as f64;
        let v = value(s);
        if v < best.0 {
            best = (v, s);
        }
    }
    let step = (s_hi - s_lo) / n as f64;
    let (mut a, mut b) = (best.1 - step, best.1 + step);
    for _ in 0..100 {
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        if value(m1) < value(m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    value(0.5 * (a + b))
}

#[test]
fn documented_boundary_values() {
    let v = psi_boundary(&monoid_h(2), &dir(&[0.5, 0.5]), 1e-12).unwrap();
    assert!((v.value - std::f64::consts::LN_2).abs() < 1e-12);
    let v = psi_boundary(&f2_h(), &dir(&[0.5, 0.5]), 1e-12).unwrap();
    assert!((v.value - 3f64.ln()).abs() < 1e-12);
    assert!(psi_boundary(&fib_h(), &dir(&[0.3, 0.7]), 1e-12).unwrap().is_neg_infinite());
}

#[test]
fn boundary_matches_curve_sampling() {
    for p in [0.2, 0.45, 0.8] {
        let v = psi_boundary(&f2_h(), &dir(&[p, 1.0 - p]), 1e-12).unwrap();
        let brute = curve_minimum(&f2_h(), p, 0.0, 6.0);
        assert!((v.value - brute).abs() < 1e-8, "p={p}: {} vs {brute}", v.value);
    }
    for p in [0.6, 0.75, 0.95] {
        let v = psi_boundary(&fib_h(), &dir(&[p, 1.0 - p]), 1e-12).unwrap();
        let brute = curve_minimum(&fib_h(), p, 0.0, 8.0);
        assert!((v.value - brute).abs() < 1e-8, "p={p}: {} vs {brute}", v.value);
    }
}

#[test]
fn three_methods_agree_on_grid() {
    let fib = catalog_automaton(CatalogName::Fibonacci).unwrap();
    let f2 = catalog_automaton(CatalogName::FreeGroupErgodic(2)).unwrap();
    for p in grid() {
        let r = dir(&[p, 1.0 - p]);
        let closed = psi_closed_form(ClosedForm::Fibonacci, &r).unwrap();
        let b = psi_boundary(&fib_h(), &r, 1e-12).unwrap();
        let t = psi_tmap(&fib, &r, 1e-12).unwrap_or_else(|e| panic!("p={p} {e}"));
        if p < 0.5 {
            assert!(closed.is_neg_infinite() && b.is_neg_infinite() && t.is_neg_infinite(), "p={p}");
        } else {
            assert!((b.value - closed.value).abs() < 1e-8, "p={p}");
            assert!((b.value - t.value).abs() < 1e-6, "p={p}");
        }

        let closed = psi_closed_form(ClosedForm::F2Delta, &r).unwrap();
        let b = psi_boundary(&f2_h(), &r, 1e-12).unwrap();
        let split = dir(&[p / 2.0, (1.0 - p) / 2.0, p / 2.0, (1.0 - p) / 2.0]);
        let t = psi_tmap(&f2, &split, 1e-12).unwrap_or_else(|e| panic!("p={p} {e}"));
        assert!((b.value - closed.value).abs() < 1e-8, "p={p}");
        assert!((b.value - t.value).abs() < 1e-6, "p={p}");
    }
}

#[test]
fn free_monoid_is_entropy() {
    for r in [[0.2, 0.3, 0.5], [0.1, 0.1, 0.8], [1.0 / 3.0; 3]] {
        let v = psi_boundary(&monoid_h(3), &dir(&r), 1e-12).unwrap();
        assert!((v.value - shannon_entropy(&r)).abs() < 1e-10);
        let c = psi_closed_form(ClosedForm::FreeMonoid(3), &dir(&r)).unwrap();
        assert!((v.value - c.value).abs() < 1e-10);
    }
}

#[test]
fn faces() {
    let v = psi_boundary(&monoid_h(3), &dir(&[0.5, 0.5, 0.0]), 1e-12).unwrap();
    assert!((v.value - std::f64::consts::LN_2).abs() < 1e-12);
    let v = psi_boundary(&f2_h(), &dir(&[1.0, 0.0]), 1e-12).unwrap();
    assert!(v.value.abs() < 1e-12);
}

fn assert_on_boundary(h: &MultiPoly, r: &[f64], v: &ExtendedValue) {
    let theta = v.minimizer.as_ref().unwrap();
    let z: Vec<f64> = theta.iter().map(|t| (-t).exp()).collect();
    assert!(h.eval(&z).abs() < 1e-10);
    let g = h.gradient(&z);
    let w: Vec<f64> = z.iter().zip(&g).map(|(a, b)| a * b).collect();
    let nw = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nr = r.iter().map(|x| x * x).sum::<f64>().sqrt();
    for i in 0..r.len() {
        for j in 0..r.len() {
            assert!((w[i] * r[j] - w[j] * r[i]).abs() / (nw * nr) < 1e-6);
        }
    }
}

#[test]
fn tmap_seeds_boundary() {
    let fib = catalog_automaton(CatalogName::Fibonacci).unwrap();
    let r = dir(&[0.9, 0.1]);
    let t = psi_tmap(&fib, &r, 1e-12).unwrap();
    let b = psi_boundary_seeded(&fib_h(), &r, 1e-12, t.minimizer.as_deref()).unwrap();
    assert!((t.value - b.value).abs() < 1e-9);
    assert_on_boundary(&fib_h(), r.as_slice(), &b);
}

#[test]
fn maxima_equal_entropy() {
    let mut best = (f64::NEG_INFINITY, 0.0);
    for k in 0..=2000 {
        let p = 0.5 + 0.5 * k as f64 / 2000.0;
        let v = psi_closed_form(ClosedForm::Fibonacci, &dir(&[p, 1.0 - p])).unwrap().value;
        if v > best.0 {
            best = (v, p);
        }
    }
    let rho = perron(&catalog_automaton(CatalogName::Fibonacci).unwrap().adjacency(), 1e-14).unwrap().rho;
    assert!((best.0 - rho.ln()).abs() < 1e-6);
    assert!((rho.ln() - LN_PHI).abs() < 1e-12);
}

#[test]
fn empirical_estimates() {
    let fib = catalog_automaton(CatalogName::Fibonacci).unwrap();
    let t = coefficients_dp(&fib, 60, TableMode::Exact).unwrap();
    let v = psi_empirical(&t, &dir(&[2.0 / 3.0, 1.0 / 3.0]), DEFAULT_CONE_EPS).unwrap();
    assert!((v.value - 2.0 / 3.0 * std::f64::consts::LN_2).abs() < 0.1);
    assert!(psi_empirical(&t, &dir(&[0.4, 0.6]), DEFAULT_CONE_EPS).unwrap().is_neg_infinite());
    let mono = catalog_automaton(CatalogName::FreeMonoid(2)).unwrap();
    let t = coefficients_dp(&mono, 60, TableMode::Exact).unwrap();
    let v = psi_empirical(&t, &dir(&[0.5, 0.5]), DEFAULT_CONE_EPS).unwrap();
    assert!((v.value - std::f64::consts::LN_2).abs() < 0.05);
    let f2 = catalog_automaton(CatalogName::FreeGroupUnambiguous(2)).unwrap();
    let t = coefficients_dp_with(&f2, &VariableMap::free_group_pairs(2), 60, TableMode::Exact).unwrap();
    for p in [0.25, 0.5, 0.6] {
        let r = dir(&[p, 1.0 - p]);
        let v = psi_empirical(&t, &r, DEFAULT_CONE_EPS).unwrap();
        let c = psi_closed_form(ClosedForm::F2Delta, &r).unwrap();
        assert!((v.value - c.value).abs() < 0.1, "p={p}");
    }
}

#[test]
fn amoeba_curve_lies_on_variety() {
    let pts = amoeba_slice(&f2_h(), 50).unwrap();
    assert!(pts.len() > 40);
    for w in pts.windows(2) {
        assert!(w[0].0 < w[1].0);
        assert!(w[0].1 >= w[1].1);
    }
    for (s, t) in pts {
        assert!(f2_h().eval(&[(-s).exp(), (-t).exp()]).abs() < 1e-10);
    }
}

fn big_psi(x: f64, y: f64) -> f64 {
    let n = x + y;
    n * psi_closed_form(ClosedForm::F2Delta, &dir(&[x / n, y / n])).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homogeneous_form_is_superadditive(a in 0.05f64..2.0, b in 0.05f64..2.0, c in 0.05f64..2.0, d in 0.05f64..2.0) {
        prop_assert!(big_psi(a + c, b + d) >= big_psi(a, b) + big_psi(c, d) - 1e-7);
    }

    #[test]
    fn boundary_point_satisfies_lagrange(p in 0.02f64..0.98) {
        let r = [p, 1.0 - p];
        let v = psi_boundary(&f2_h(), &dir(&r), 1e-12).unwrap();
        assert_on_boundary(&f2_h(), &r, &v);
        let c = psi_closed_form(ClosedForm::F2Delta, &dir(&r)).unwrap();
        prop_assert!((v.value - c.value).abs() < 1e-8);
    }

    #[test]
    fn free_monoid_boundary_is_shannon(w in proptest::collection::vec(0.05f64..1.0, 4)) {
        let r = Direction::from_weights(&w).unwrap();
        let v = psi_boundary(&monoid_h(4), &r, 1e-12).unwrap();
        prop_assert!((v.value - shannon_entropy(r.as_slice())).abs() < 1e-9);
    }
}
