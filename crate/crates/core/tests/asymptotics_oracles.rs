use langrowth_core::asymptotics::{
    critical_points, f2_critical_closed, f2_denominator, fit_correction, hessian_scalar_f2,
};
use langrowth_core::automaton::{catalog_automaton, CatalogName};
use langrowth_core::indicatrice::{psi_boundary, Direction};
use langrowth_core::polyalg::MultiPoly;
use langrowth_core::series::{coefficients_dp, coefficients_dp_with, TableMode, VariableMap};

fn dir(v: &[f64]) -> Direction {
    Direction::new(v.to_vec()).unwrap()
}

fn fib_h() -> MultiPoly {
    MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], -1)])
}

fn monoid_h() -> MultiPoly {
    MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1)])
}

#[test]
fn documented_critical_points() {
    let c = critical_points(&f2_denominator(), &dir(&[0.5, 0.5]), 1e-12).unwrap();
    let m = c.iter().find(|p| p.minimal).unwrap();
    assert!((m.z_star[0] - 1.0 / 3.0).abs() < 1e-10 && (m.z_star[1] - 1.0 / 3.0).abs() < 1e-10);
    assert!((m.height - 3f64.ln()).abs() < 1e-10);
    let c = critical_points(&fib_h(), &dir(&[2.0 / 3.0, 1.0 / 3.0]), 1e-12).unwrap();
    let m = c.iter().find(|p| p.minimal).unwrap();
    assert!((m.z_star[0] - 0.5).abs() < 1e-10 && (m.z_star[1] - 1.0).abs() < 1e-10);
    for p in [0.1, 0.35, 0.8] {
        let c = critical_points(&monoid_h(), &dir(&[p, 1.0 - p]), 1e-12).unwrap();
        let m = c.iter().find(|x| x.minimal).unwrap();
        assert!((m.z_star[0] - p).abs() < 1e-10 && (m.z_star[1] - (1.0 - p)).abs() < 1e-10);
    }
}

#[test]
fn minimal_height_equals_boundary_value() {
    for k in 1..=21 {
        let p = k as f64 / 22.0;
        let r = dir(&[p, 1.0 - p]);
        for (h, finite) in [(f2_denominator(), true), (fib_h(), p > 0.5), (monoid_h(), true)] {
            if !finite {
                continue;
            }
            let c = critical_points(&h, &r, 1e-12).unwrap();
            let m = c.iter().find(|x| x.minimal).unwrap();
            let b = psi_boundary(&h, &r, 1e-12).unwrap();
            assert!((m.height - b.value).abs() < 1e-8, "p={p}");
            let g = h.gradient(&m.z_star);
            for ((z, gi), ri) in m.z_star.iter().zip(&g).zip(r.as_slice()) {
                assert!((m.lambda * z * gi - ri).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn closed_form_matches_newton_and_symmetry() {
    for k in 1..=99 {
        let p = k as f64 / 100.0;
        let c = f2_critical_closed(p).unwrap();
        assert!(f2_denominator().eval(&c.z_star).abs() < 1e-12);
        assert!(hessian_scalar_f2(&c.z_star).unwrap() > 0.0);
        let s = f2_critical_closed(1.0 - p).unwrap();
        assert!((c.z_star[0] - s.z_star[1]).abs() < 1e-12 && (c.z_star[1] - s.z_star[0]).abs() < 1e-12);
        let n = critical_points(&f2_denominator(), &dir(&[p, 1.0 - p]), 1e-12).unwrap();
        let m = n.iter().find(|x| x.minimal).unwrap();
        assert!((m.z_star[0] - c.z_star[0]).abs() < 1e-9);
    }
}

#[test]
fn exponent_corrections() {
    let f2 = catalog_automaton(CatalogName::FreeGroupUnambiguous(2)).unwrap();
    let t = coefficients_dp_with(&f2, &VariableMap::free_group_pairs(2), 400, TableMode::Log).unwrap();
    let fit = fit_correction(&t, &dir(&[0.5, 0.5]), 3f64.ln(), 40, 400).unwrap();
    assert!((fit.slope + 0.5).abs() < 0.05, "{fit:?}");

    let fib = catalog_automaton(CatalogName::Fibonacci).unwrap();
    let t = coefficients_dp(&fib, 300, TableMode::Log).unwrap();
    let psi = 2.0 / 3.0 * std::f64::consts::LN_2;
    let fit = fit_correction(&t, &dir(&[2.0 / 3.0, 1.0 / 3.0]), psi, 30, 300).unwrap();
    assert!((fit.slope + 0.5).abs() < 0.05, "{fit:?}");

    // independent oracle: γ_{(2k, k)} = C(2k + 1, k)
    let lnc = |n: f64, k: f64| libm_lgamma(n + 1.0) - libm_lgamma(k + 1.0) - libm_lgamma(n - k + 1.0);
    for k in [10u32, 50, 100] {
        let got = t.log_count(&[2 * k, k]).unwrap();
        assert!((got - lnc(2.0 * k as f64 + 1.0, k as f64)).abs() < 1e-9);
    }

    let mono = catalog_automaton(CatalogName::FreeMonoid(2)).unwrap();
    let t = coefficients_dp(&mono, 400, TableMode::Log).unwrap();
    let fit = fit_correction(&t, &dir(&[0.5, 0.5]), std::f64::consts::LN_2, 40, 400).unwrap();
    assert!((fit.slope + 0.5).abs() < 0.05, "{fit:?}");
    assert!(fit_correction(&t, &dir(&[0.5, 0.5]), 0.0, 40, 44).is_err());
}

fn libm_lgamma(x: f64) -> f64 {
    // Stirling series, adequate for x >= 10 after shifting
    let mut shift = 0.0;
    let mut x = x;
    while x < 10.0 {
        shift -= x.ln();
        x += 1.0;
    }
    shift + (x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + 1.0 / (12.0 * x)
        - 1.0 / (360.0 * x.powi(3))
        + 1.0 / (1260.0 * x.powi(5))
}
