//! Invariant suites run by `langrowth verify` and the acceptance target.

use langrowth_core::asymptotics::{critical_points, f2_critical_closed, f2_denominator, fit_correction, hessian_scalar_f2};
use langrowth_core::automaton::{catalog_automaton, Automaton, CatalogName};
use langrowth_core::catalog::{delta_free_group, delta_from_fractions, psi_f3, r_polynomial, verify_fm_identities};
use langrowth_core::indicatrice::{
    psi_boundary, psi_closed_form, psi_empirical, psi_tmap, ClosedForm, Direction, DEFAULT_CONE_EPS,
};
use langrowth_core::polyalg::MultiPoly;
use langrowth_core::series::{coefficients_dp, coefficients_dp_with, growth_series, growth_series_with, TableMode, VariableMap};
use langrowth_core::spectral::{parry, perron, rate_function, sanov_rate, simulate_ldp, verify_t_identities, DEFAULT_PERRON_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::language::letter_coded_monoid;

pub const TOL: f64 = 1e-12;
pub const MC_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(suite: &'static str, name: &str, pass: bool, detail: String) -> Check {
    Check {
        suite,
        name: name.to_string(),
        pass,
        detail,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Agreement,
    Spectral,
    Asymptotics,
    All,
}

pub fn run_suite(s: Suite) -> Vec<Check> {
    match s {
        Suite::Identities => identities(),
        Suite::Agreement => agreement(),
        Suite::Spectral => spectral(),
        Suite::Asymptotics => asymptotics(),
        Suite::All => [identities(), agreement(), spectral(), asymptotics()].concat(),
    }
}

pub fn fib_h() -> MultiPoly {
    MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], -1)])
}

fn automaton(name: CatalogName) -> Automaton {
    catalog_automaton(name).expect("catalog automata are valid")
}

fn dir(v: &[f64]) -> Direction {
    Direction::new(v.to_vec()).expect("valid direction")
}

/// Strictly positive grid `k/22`, `k = 1..21`.
pub fn direction_grid() -> Vec<f64> {
    (1..=21).map(|k| k as f64 / 22.0).collect()
}

pub fn catalog_series() -> Check {
    let fib = growth_series(&automaton(CatalogName::Fibonacci)).map(|s| s.to_string());
    let paired = growth_series_with(&automaton(CatalogName::FreeGroupUnambiguous(2)), &VariableMap::free_group_pairs(2))
        .map(|s| s.cancel_binomial_factors());
    let delta = delta_free_group(2).expect("rank 2");
    let ok_fib = fib.as_deref() == Ok("(1 + z2) / (1 - z1 - z1*z2)");
    let ok_f2 = paired
        .as_ref()
        .is_ok_and(|p| p.numerator() == delta.numerator() && p.denominator() == delta.denominator());
    check(
        "identities",
        "catalog series",
        ok_fib && ok_f2,
        format!(
            "fibonacci {}; paired F2 {}",
            fib.unwrap_or_default(),
            paired.map(|p| p.to_string()).unwrap_or_default()
        ),
    )
}

pub fn fm_identities(m: usize) -> Check {
    match verify_fm_identities(m) {
        Ok(r) => check(
            "identities",
            &format!("product identities m={m}"),
            r.pass(),
            format!(
                "determinant {} numerator {} delta {}",
                r.determinant_identity, r.numerator_identity, r.delta_identity
            ),
        ),
        Err(e) => check("identities", &format!("product identities m={m}"), false, e.to_string()),
    }
}

pub fn fraction_clearing(m: usize) -> Check {
    let ok = delta_from_fractions(m).is_ok_and(|d| *d.denominator() == r_polynomial(m));
    let detail = if ok { "denominator equals R" } else { "denominator differs from R" };
    check("identities", &format!("fraction form clears to R, m={m}"), ok, detail.to_string())
}

fn random_interior(rng: &mut ChaCha8Rng, d: usize) -> Direction {
    let w: Vec<f64> = (0..d).map(|_| rng.random_range(0.01..1.0)).collect();
    Direction::from_weights(&w).expect("positive weights")
}

/// Automata with 0/1 irreducible adjacency used for the T-map identities.
pub fn tmap_catalog() -> Vec<(&'static str, Automaton)> {
    vec![
        ("fibonacci", automaton(CatalogName::Fibonacci)),
        ("free_group_ergodic(2)", automaton(CatalogName::FreeGroupErgodic(2))),
        ("free_group_ergodic(3)", automaton(CatalogName::FreeGroupErgodic(3))),
        ("free_monoid(3) letter-coded", letter_coded_monoid(3)),
    ]
}

pub fn t_identities(samples: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(MC_SEED);
    tmap_catalog()
        .into_iter()
        .map(|(name, a)| {
            let adj = a.adjacency();
            let mut worst = (0.0f64, 0.0f64);
            let mut ok = true;
            for _ in 0..samples {
                let q = random_interior(&mut rng, adj.size());
                match verify_t_identities(&adj, &q) {
                    Ok(r) => {
                        ok &= r.pass;
                        worst.0 = worst.0.max(r.fixed_point_residual);
                        worst.1 = worst.1.max(r.det_residual);
                    }
                    Err(_) => ok = false,
                }
            }
            check(
                "identities",
                &format!("T-map identities on {name}, {samples} random q"),
                ok,
                format!("max |tA(s) - t| {:e}, max |det| {:e}", worst.0, worst.1),
            )
        })
        .collect()
}

pub fn identities() -> Vec<Check> {
    let mut out = vec![catalog_series()];
    out.extend((2..=4).map(fm_identities));
    out.extend((2..=4).map(fraction_clearing));
    out.extend(t_identities(100));
    out
}

/// Largest deviations between the three routes on the direction grid.
pub fn method_agreement() -> Vec<Check> {
    let fib = automaton(CatalogName::Fibonacci);
    let f2 = automaton(CatalogName::FreeGroupErgodic(2));
    let f2_h = f2_denominator();
    let mut out = Vec::new();
    for lang in ["fibonacci", "f2_delta"] {
        let mut dev_tmap = 0.0f64;
        let mut dev_closed = 0.0f64;
        let mut ok = true;
        for p in direction_grid() {
            let r = dir(&[p, 1.0 - p]);
            let res = if lang == "fibonacci" {
                (
                    psi_boundary(&fib_h(), &r, TOL),
                    psi_tmap(&fib, &r, TOL),
                    psi_closed_form(ClosedForm::Fibonacci, &r),
                )
            } else {
                let split = dir(&[p / 2.0, (1.0 - p) / 2.0, p / 2.0, (1.0 - p) / 2.0]);
                (
                    psi_boundary(&f2_h, &r, TOL),
                    psi_tmap(&f2, &split, TOL),
                    psi_closed_form(ClosedForm::F2Delta, &r),
                )
            };
            match res {
                (Ok(b), Ok(t), Ok(c)) => {
                    if c.is_neg_infinite() {
                        ok &= b.is_neg_infinite() && t.is_neg_infinite();
                    } else {
                        dev_tmap = dev_tmap.max((b.value - t.value).abs());
                        dev_closed = dev_closed.max((b.value - c.value).abs());
                    }
                }
                _ => ok = false,
            }
        }
        out.push(check(
            "agreement",
            &format!("{lang}: boundary, tmap and closed form on 21 directions"),
            ok && dev_tmap < 1e-6 && dev_closed < 1e-8,
            format!("max |boundary - tmap| {dev_tmap:e}, max |boundary - closed| {dev_closed:e}"),
        ));
    }
    out
}

pub fn empirical_agreement() -> Check {
    let mut worst = 0.0f64;
    let mut ok = true;
    let mut cases: Vec<(&str, Result<_, _>, ClosedForm, Vec<f64>)> = Vec::new();
    let fib = coefficients_dp(&automaton(CatalogName::Fibonacci), 60, TableMode::Exact);
    let f2 = coefficients_dp_with(
        &automaton(CatalogName::FreeGroupUnambiguous(2)),
        &VariableMap::free_group_pairs(2),
        60,
        TableMode::Exact,
    );
    let mono = coefficients_dp(&automaton(CatalogName::FreeMonoid(2)), 60, TableMode::Exact);
    for p in [0.6, 2.0 / 3.0, 0.75, 0.9] {
        cases.push(("fibonacci", fib.clone(), ClosedForm::Fibonacci, vec![p, 1.0 - p]));
    }
    for p in [0.25, 0.5, 0.6, 0.75] {
        cases.push(("f2_delta", f2.clone(), ClosedForm::F2Delta, vec![p, 1.0 - p]));
        cases.push(("free_monoid", mono.clone(), ClosedForm::FreeMonoid(2), vec![p, 1.0 - p]));
    }
    for (_, t, c, r) in &cases {
        let r = dir(r);
        match (t, psi_closed_form(*c, &r)) {
            (Ok(t), Ok(cv)) => match psi_empirical(t, &r, DEFAULT_CONE_EPS) {
                Ok(e) => worst = worst.max((e.value - cv.value).abs()),
                Err(_) => ok = false,
            },
            _ => ok = false,
        }
    }
    check(
        "agreement",
        "empirical within 0.1 of closed form at table size 60",
        ok && worst < 0.1,
        format!("max deviation {worst:.4} over {} directions", cases.len()),
    )
}

pub fn f3_agreement() -> Check {
    let mut worst = 0.0f64;
    let mut ok = true;
    for r in [[1.0 / 3.0; 3], [0.4, 0.3, 0.3], [0.2, 0.5, 0.3], [0.6, 0.1, 0.3]] {
        let r = dir(&r);
        match (psi_f3(&r), psi_boundary(&r_polynomial(3), &r, TOL)) {
            (Ok(a), Ok(b)) => worst = worst.max((a.value - b.value).abs()),
            _ => ok = false,
        }
    }
    let bary = psi_f3(&Direction::uniform(3)).map(|v| v.value).unwrap_or(f64::NAN);
    check(
        "agreement",
        "F3 quartic against boundary optimization",
        ok && worst < 1e-8 && (bary - 5f64.ln()).abs() < 1e-8,
        format!("max deviation {worst:e}; barycenter {bary}"),
    )
}

pub fn agreement() -> Vec<Check> {
    let mut out = method_agreement();
    out.push(empirical_agreement());
    out.push(f3_agreement());
    out
}

pub fn spectral() -> Vec<Check> {
    let fib = automaton(CatalogName::Fibonacci);
    let adj = fib.adjacency();
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let mut out = Vec::new();
    let rho = perron(&adj, DEFAULT_PERRON_TOL).map(|d| d.rho).unwrap_or(f64::NAN);
    out.push(check(
        "spectral",
        "Perron root of the Fibonacci shift",
        (rho - golden).abs() < 1e-10,
        format!("rho {rho}"),
    ));
    let Ok(sd) = parry(&adj) else {
        out.push(check("spectral", "Parry measure", false, "parry failed".into()));
        return out;
    };
    let mut worst = 0.0f64;
    let mut ok = true;
    for p in direction_grid().into_iter().filter(|&p| p > 0.5) {
        let r = dir(&[p, 1.0 - p]);
        let analytic = psi_boundary(&fib_h(), &r, TOL).and_then(|psi| Ok(rate_function(&adj, &r, &psi)?));
        match (analytic, sanov_rate(&sd.p, &r, TOL)) {
            (Ok(a), Ok(s)) => {
                ok &= a >= -1e-9;
                worst = worst.max((a - s).abs());
            }
            _ => ok = false,
        }
    }
    out.push(check(
        "spectral",
        "log rho - psi matches the Sanov rate on the finite region",
        ok && worst < 1e-6,
        format!("max deviation {worst:e}"),
    ));
    let st = dir(&sd.stationary);
    let i_st = psi_tmap(&fib, &st, TOL)
        .ok()
        .and_then(|psi| rate_function(&adj, &st, &psi).ok())
        .unwrap_or(f64::NAN);
    out.push(check(
        "spectral",
        "rate vanishes at the Parry frequencies",
        i_st.abs() < 1e-8,
        format!("I = {i_st:e}"),
    ));
    out.extend(monte_carlo());
    out
}

/// Monte Carlo at `n = 200`, `10⁴` trials: the Parry direction and a
/// moderate deviation whose window probability is observable at that budget.
pub fn monte_carlo() -> Vec<Check> {
    let fib = automaton(CatalogName::Fibonacci);
    let adj = fib.adjacency();
    let Ok(sd) = parry(&adj) else {
        return vec![check("spectral", "Monte Carlo", false, "parry failed".into())];
    };
    let mut out = Vec::new();
    for r in [sd.stationary.clone(), vec![0.68, 0.32]] {
        let dr = dir(&r);
        let analytic = psi_tmap(&fib, &dr, TOL)
            .ok()
            .and_then(|psi| rate_function(&adj, &dr, &psi).ok())
            .unwrap_or(f64::NAN);
        let name = format!("Monte Carlo at r = ({:.4}, {:.4})", r[0], r[1]);
        match simulate_ldp(&sd.p, &sd.stationary, &dr, 200, 10_000, 0.02, MC_SEED) {
            Ok(e) => {
                let est = e.estimate.unwrap_or(f64::INFINITY);
                out.push(check(
                    "spectral",
                    &name,
                    (est - analytic).abs() < 0.15,
                    format!(
                        "estimate {est:.4} [{:.4}, {:.4}], analytic {analytic:.4}, hits {}/{}",
                        e.ci_low, e.ci_high, e.hits, e.trials
                    ),
                ));
            }
            Err(err) => out.push(check("spectral", &name, false, err.to_string())),
        }
    }
    out
}

/// Name, language, direction, exact `ψ` and fit window.
type SlopeCase = (&'static str, Automaton, VariableMap, [f64; 2], f64, usize, usize);

/// Regression slopes of `log γ_{nr} - nψ` against `log n` from log-domain tables.
pub fn slope_checks() -> Vec<Check> {
    let cases: Vec<SlopeCase> = vec![
        (
            "F2 at (1/2, 1/2)",
            automaton(CatalogName::FreeGroupUnambiguous(2)),
            VariableMap::free_group_pairs(2),
            [0.5, 0.5],
            3f64.ln(),
            40,
            400,
        ),
        (
            "Fibonacci at (2/3, 1/3)",
            automaton(CatalogName::Fibonacci),
            VariableMap::identity(2),
            [2.0 / 3.0, 1.0 / 3.0],
            2.0 / 3.0 * std::f64::consts::LN_2,
            30,
            399,
        ),
        (
            "free monoid at (1/2, 1/2)",
            automaton(CatalogName::FreeMonoid(2)),
            VariableMap::identity(2),
            [0.5, 0.5],
            std::f64::consts::LN_2,
            40,
            400,
        ),
    ];
    cases
        .into_iter()
        .map(|(name, a, vars, r, psi, lo, hi)| {
            let fit = coefficients_dp_with(&a, &vars, hi, TableMode::Log)
                .map_err(|e| e.to_string())
                .and_then(|t| fit_correction(&t, &dir(&r), psi, lo, hi).map_err(|e| e.to_string()));
            match fit {
                Ok(f) => check(
                    "asymptotics",
                    &format!("slope -1/2 for {name}"),
                    (f.slope + 0.5).abs() < 0.05,
                    format!(
                        "slope {:.4}, log c {:.4}, rms {:.2e}, n in [{}, {}], {} points",
                        f.slope, f.intercept, f.residual, f.n_min, f.n_max, f.points
                    ),
                ),
                Err(e) => check("asymptotics", &format!("slope -1/2 for {name}"), false, e),
            }
        })
        .collect()
}

pub fn hessian_checks() -> Check {
    let at_third = hessian_scalar_f2(&[1.0 / 3.0, 1.0 / 3.0]).unwrap_or(f64::NAN);
    let positive = (1..=99).all(|k| {
        f2_critical_closed(k as f64 / 100.0)
            .and_then(|c| hessian_scalar_f2(&c.z_star))
            .is_ok_and(|h| h > 0.0)
    });
    check(
        "asymptotics",
        "Hessian scalar is 1 at (1/3, 1/3) and positive on the p-grid",
        (at_third - 1.0).abs() < 1e-12 && positive,
        format!("value at (1/3, 1/3): {at_third}"),
    )
}

pub fn critical_heights() -> Check {
    let mut worst = 0.0f64;
    let mut ok = true;
    for p in direction_grid() {
        let r = dir(&[p, 1.0 - p]);
        for (h, finite) in [(f2_denominator(), true), (fib_h(), p > 0.5)] {
            if !finite {
                continue;
            }
            let cp = critical_points(&h, &r, TOL);
            let b = psi_boundary(&h, &r, TOL);
            match (cp, b) {
                (Ok(c), Ok(b)) => match c.iter().find(|x| x.minimal) {
                    Some(m) => worst = worst.max((m.height - b.value).abs()),
                    None => ok = false,
                },
                _ => ok = false,
            }
        }
    }
    check(
        "asymptotics",
        "minimal critical height equals the boundary value",
        ok && worst < 1e-8,
        format!("max deviation {worst:e}"),
    )
}

pub fn asymptotics() -> Vec<Check> {
    let mut out = slope_checks();
    out.push(hessian_checks());
    out.push(critical_heights());
    out
}
