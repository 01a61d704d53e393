use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SpectralError, StochasticMatrix};
use crate::indicatrice::Direction;

/// Largest `n * trials` accepted by [`simulate_ldp`].
pub const MAX_SIMULATION_STEPS: u128 = 10_000_000_000;

const Z95: f64 = 1.959_963_984_540_054;

#[derive(Clone, Debug, PartialEq)]
pub struct LdpEstimate {
    pub seed: u64,
    pub n: usize,
    pub trials: usize,
    pub window: f64,
    pub hits: usize,
    pub fraction: f64,
    /// `-(1/n) log(fraction)`, absent when there were no hits.
    pub estimate: Option<f64>,
    /// 95% Wilson interval for the fraction, mapped to the rate scale.
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Samples stationary trajectories of the chain and counts those whose
/// empirical state frequencies lie in the closed `ℓ₁` ball of radius
/// `window` around `r`. Trial `k` draws from its own ChaCha stream, so the
/// result depends only on `(seed, trials)`.
pub fn simulate_ldp(
    p: &StochasticMatrix,
    stationary: &[f64],
    r: &Direction,
    n: usize,
    trials: usize,
    window: f64,
    seed: u64,
) -> Result<LdpEstimate, SpectralError> {
    let d = p.size();
    if !(window > 0.0) {
        return Err(SpectralError::InvalidWindow);
    }
    if r.dim() != d || stationary.len() != d {
        return Err(SpectralError::Dimension {
            expected: d,
            found: r.dim(),
        });
    }
    let steps = n as u128 * trials as u128;
    if steps > MAX_SIMULATION_STEPS || n == 0 {
        return Err(SpectralError::Budget(steps));
    }
    let cumulative = |row: &[f64]| -> Vec<f64> {
        let mut acc = 0.0;
        row.iter()
            .map(|x| {
                acc += x;
                acc
            })
            .collect()
    };
    let start = cumulative(stationary);
    let rows: Vec<Vec<f64>> = (0..d).map(|i| cumulative(p.row(i))).collect();
    let draw = |c: &[f64], x: f64| c.iter().position(|&v| x < v).unwrap_or(c.len() - 1);

    let mut hits = 0;
    let mut counts = alloc::vec![0usize; d];
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        counts.iter_mut().for_each(|c| *c = 0);
        let mut state = draw(&start, rng.random());
        counts[state] += 1;
        for _ in 1..n {
            state = draw(&rows[state], rng.random());
            counts[state] += 1;
        }
        let dist: f64 = counts
            .iter()
            .zip(r.as_slice())
            .map(|(&c, &ri)| (c as f64 / n as f64 - ri).abs())
            .sum();
        if dist <= window {
            hits += 1;
        }
    }
    let fraction = hits as f64 / trials as f64;
    let (lo, hi) = wilson(hits, trials);
    let to_rate = |f: f64| if f > 0.0 { -libm::log(f) / n as f64 } else { f64::INFINITY };
    Ok(LdpEstimate {
        seed,
        n,
        trials,
        window,
        hits,
        fraction,
        estimate: (hits > 0).then(|| to_rate(fraction)),
        ci_low: to_rate(hi),
        ci_high: to_rate(lo),
    })
}

fn wilson(k: usize, n: usize) -> (f64, f64) {
    let n = n as f64;
    let p = k as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 * libm::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> StochasticMatrix {
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        StochasticMatrix::new(2, alloc::vec![1.0 / phi, 1.0 / (phi * phi), 1.0, 0.0]).unwrap()
    }

    #[test]
    fn zero_window_rejected() {
        let r = Direction::new(alloc::vec![0.5, 0.5]).unwrap();
        assert_eq!(
            simulate_ldp(&fib(), &[0.5, 0.5], &r, 10, 10, 0.0, 1),
            Err(SpectralError::InvalidWindow)
        );
    }

    #[test]
    fn reproducible() {
        let r = Direction::new(alloc::vec![0.72, 0.28]).unwrap();
        let st = [0.7236, 0.2764];
        let a = simulate_ldp(&fib(), &st, &r, 50, 200, 0.05, 9).unwrap();
        let b = simulate_ldp(&fib(), &st, &r, 50, 200, 0.05, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.hits > 0);
        assert!(a.ci_low <= a.estimate.unwrap() && a.estimate.unwrap() <= a.ci_high);
    }
}
