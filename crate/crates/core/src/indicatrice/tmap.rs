use alloc::vec::Vec;

use super::{Direction, ExtendedValue, IndicatriceError, Method};
use crate::automaton::Automaton;
use crate::spectral::log_linear_minimize;

/// For each state, the symbol labeling its incoming edges, provided the
/// automaton meets the T-map preconditions.
pub fn tmap_symbol_order(a: &Automaton) -> Result<Vec<usize>, IndicatriceError> {
    if !a.is_ergodic() {
        return Err(IndicatriceError::Precondition("automaton must be ergodic"));
    }
    let labels = a
        .state_labels()
        .ok_or(IndicatriceError::Precondition("automaton must be vertex labeled"))?;
    let d = a.alphabet().len();
    let mut seen = alloc::vec![false; d];
    if labels.len() != d {
        return Err(IndicatriceError::Precondition("states must correspond one-to-one to symbols"));
    }
    for &l in &labels {
        if seen[l] {
            return Err(IndicatriceError::Precondition("states must correspond one-to-one to symbols"));
        }
        seen[l] = true;
    }
    if !a.adjacency().is_zero_one() {
        return Err(IndicatriceError::Precondition("adjacency matrix must be 0/1"));
    }
    Ok(labels)
}

/// `ψ(r) = inf_q -Σ_j r_j log T(q)_j`. With `t_j = q_j / v_j` the objective is
/// `-Σ_j r_j log t_j + Σ_j r_j log (tA)_j`, convex in `log t`.
/// The minimizer is reported as `θ* = -log s*` indexed by symbol.
pub fn psi_tmap(a: &Automaton, r: &Direction, tol: f64) -> Result<ExtendedValue, IndicatriceError> {
    let labels = tmap_symbol_order(a)?;
    let d = labels.len();
    if r.dim() != d {
        return Err(IndicatriceError::Dimension {
            expected: d,
            found: r.dim(),
        });
    }
    let adj = a.adjacency();
    let w = adj.to_f64();
    let rs: Vec<f64> = labels.iter().map(|&l| r.as_slice()[l]).collect();
    let res = log_linear_minimize(&w, d, &rs, tol)?;
    if res.value == f64::NEG_INFINITY {
        return Ok(ExtendedValue::neg_infinity(Method::Tmap));
    }
    let t: Vec<f64> = res.x.iter().map(|x| libm::exp(*x)).collect();
    let mut theta = alloc::vec![0.0; d];
    for j in 0..d {
        let ta: f64 = (0..d).map(|i| t[i] * w[i * d + j]).sum();
        theta[labels[j]] = -libm::log(t[j] / ta);
    }
    Ok(ExtendedValue::finite(res.value, Some(theta), Method::Tmap))
}
