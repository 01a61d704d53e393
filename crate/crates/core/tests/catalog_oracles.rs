use langrowth_core::automaton::{catalog_automaton, CatalogName};
use langrowth_core::catalog::{
    chi_akemann, chi_kesten, chi_of_alpha, deg8_check, deg8_coefficients, delta_free_group, psi_f3, r_polynomial,
    verify_fm_identities, CogrowthSemantics, GroupParams,
};
use langrowth_core::indicatrice::{psi_boundary, Direction};
use langrowth_core::series::{coefficients_dp_with, series_coefficients, TableMode, VariableMap};
use proptest::prelude::*;

fn dir(v: &[f64]) -> Direction {
    Direction::new(v.to_vec()).unwrap()
}

#[test]
fn product_identities_hold() {
    for m in 2..=4 {
        let rep = verify_fm_identities(m).unwrap();
        assert!(rep.pass(), "m={m}: {rep:?}");
    }
}

#[test]
fn delta_series_counts_reduced_words() {
    for m in 2..=3 {
        let a = catalog_automaton(CatalogName::FreeGroupUnambiguous(m)).unwrap();
        let dp = coefficients_dp_with(&a, &VariableMap::free_group_pairs(m), 12, TableMode::Exact).unwrap();
        let ex = series_coefficients(&delta_free_group(m).unwrap(), 12).unwrap();
        assert_eq!(dp, ex);
    }
}

#[test]
fn f3_values() {
    let v = psi_f3(&Direction::uniform(3)).unwrap();
    assert!((v.value - 5f64.ln()).abs() < 1e-8);
    let b = psi_boundary(&r_polynomial(3), &Direction::uniform(3), 1e-12).unwrap();
    assert!((b.value - 5f64.ln()).abs() < 1e-8);
    let r = dir(&[0.4, 0.3, 0.3]);
    let f = psi_f3(&r).unwrap();
    let b = psi_boundary(&r_polynomial(3), &r, 1e-12).unwrap();
    assert!((f.value - b.value).abs() < 1e-8);
}

#[test]
fn barycenter_maximum() {
    for m in 2..=4 {
        let b = psi_boundary(&r_polynomial(m), &Direction::uniform(m), 1e-12).unwrap();
        assert!((b.value - ((2 * m - 1) as f64).ln()).abs() < 1e-8, "m={m}");
    }
}

#[test]
fn spectral_radius_formulas() {
    for m in 2..=6 {
        let a = chi_akemann(&GroupParams::uniform(m).unwrap()).unwrap();
        assert!((a - chi_kesten(m).unwrap()).abs() < 1e-10);
        assert_eq!(chi_of_alpha((2 * m - 1) as f64, m, CogrowthSemantics::NormalSubgroup).unwrap(), 1.0);
        let sk = ((2 * m - 1) as f64).sqrt();
        let at = chi_of_alpha(sk, m, CogrowthSemantics::Schreier).unwrap();
        let above = chi_of_alpha(sk * (1.0 + 1e-9), m, CogrowthSemantics::Schreier).unwrap();
        assert!((at - chi_kesten(m).unwrap()).abs() < 1e-15);
        assert!((above - at).abs() < 1e-8);
        let mut prev = at;
        for k in 1..=200 {
            let alpha = sk + (2.0 * m as f64 - 1.0 - sk) * k as f64 / 200.0;
            let c = chi_of_alpha(alpha, m, CogrowthSemantics::NormalSubgroup).unwrap();
            assert!(c >= prev - 1e-15);
            prev = c;
        }
    }
    let (x, c) = deg8_check(0.3, 0.2).unwrap();
    assert!(x > 0.0);
    let a = chi_akemann(&GroupParams::new(2, Some(vec![0.3, 0.2])).unwrap()).unwrap();
    assert!((c - a).abs() < 1e-10);
}

#[test]
fn deg8_factored_when_equal() {
    // (1 + 16x)^3 (48x - 1) / 65536
    let c = deg8_coefficients(0.25, 0.25);
    let expect = [-1.0, 0.0, 1536.0, 32768.0, 196608.0];
    for (a, b) in c.iter().zip(expect) {
        assert!((a * 65536.0 - b).abs() < 1e-9, "{a} vs {b}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn f3_agrees_with_boundary(w in proptest::collection::vec(0.1f64..1.0, 3)) {
        let r = Direction::from_weights(&w).unwrap();
        let f = psi_f3(&r).unwrap();
        let b = psi_boundary(&r_polynomial(3), &r, 1e-12).unwrap();
        prop_assert!((f.value - b.value).abs() < 1e-8);
        let s = r.as_slice();
        let perm = dir(&[s[1], s[2], s[0]]);
        prop_assert!((psi_f3(&perm).unwrap().value - f.value).abs() < 1e-8);
    }

    #[test]
    fn deg8_route_matches_minimization(p1 in 0.05f64..0.45) {
        let p2 = 0.5 - p1;
        let (_, c) = deg8_check(p1, p2).unwrap();
        let a = chi_akemann(&GroupParams::new(2, Some(vec![p1, p2])).unwrap()).unwrap();
        prop_assert!((c - a).abs() < 1e-10);
    }
}
