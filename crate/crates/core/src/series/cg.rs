use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::table::{CoefficientTable, TableMode};
use super::SeriesError;
use crate::polyalg::compositions;

/// Outcome of the concave-growth check
/// `ν(B_{x+y}(a)) >= c ν(B_x(b)) ν(B_y(b))` over a finite range.
#[derive(Clone, Debug, PartialEq)]
pub struct CgReport {
    pub a: u32,
    pub b: u32,
    pub range: u32,
    /// Minimal ratio; `f64::INFINITY` when no pair qualified.
    pub c: f64,
    /// Minimal ratio as an exact fraction.
    pub min_ratio: Option<(BigUint, BigUint)>,
    pub pairs_tested: usize,
    pub worst_pair: Option<(Vec<u32>, Vec<u32>)>,
    pub pass: bool,
}

/// Brute-force check over all `x, y` with `‖x‖₁, ‖y‖₁ <= range` whose
/// `b`-balls carry positive mass. Balls are closed `ℓ₁` balls in `ℕ^d`.
pub fn check_cg(t: &CoefficientTable, a: u32, b: u32, range: u32) -> Result<CgReport, SeriesError> {
    if t.mode() != TableMode::Exact {
        return Err(SeriesError::NeedsExact);
    }
    let need = (2 * range + a).max(range + b) as usize;
    if need > t.max_total() {
        return Err(SeriesError::InsufficientRange {
            need,
            have: t.max_total(),
        });
    }
    let d = t.dim();
    let points: Vec<Vec<u32>> = (0..=range).flat_map(|n| compositions(n, d)).collect();
    let ball_b = offsets(d, b);
    let ball_a = offsets(d, a);
    let mass = |x: &[u32], ball: &[Vec<i64>]| -> Result<BigUint, SeriesError> {
        let mut s = BigUint::zero();
        let mut p = alloc::vec![0u32; d];
        'outer: for off in ball {
            for k in 0..d {
                let v = i64::from(x[k]) + off[k];
                if v < 0 {
                    continue 'outer;
                }
                p[k] = v as u32;
            }
            s += t.count(&p)?;
        }
        Ok(s)
    };
    let mut nu_b = Vec::with_capacity(points.len());
    for x in &points {
        nu_b.push(mass(x, &ball_b)?);
    }
    let mut nu_a: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    let mut best: Option<(BigUint, BigUint, usize, usize)> = None;
    let mut pairs = 0;
    for i in 0..points.len() {
        if nu_b[i].is_zero() {
            continue;
        }
        for j in i..points.len() {
            if nu_b[j].is_zero() {
                continue;
            }
            pairs += 1;
            let sum: Vec<u32> = points[i].iter().zip(&points[j]).map(|(p, q)| p + q).collect();
            let num = match nu_a.get(&sum) {
                Some(v) => v.clone(),
                None => {
                    let v = mass(&sum, &ball_a)?;
                    nu_a.insert(sum, v.clone());
                    v
                }
            };
            let den = &nu_b[i] * &nu_b[j];
            let smaller = match &best {
                None => true,
                Some((bn, bd, _, _)) => &num * bd < bn * &den,
            };
            if smaller {
                best = Some((num, den, i, j));
            }
        }
    }
    Ok(match best {
        None => CgReport {
            a,
            b,
            range,
            c: f64::INFINITY,
            min_ratio: None,
            pairs_tested: 0,
            worst_pair: None,
            pass: true,
        },
        Some((num, den, i, j)) => CgReport {
            a,
            b,
            range,
            c: ratio(&num, &den),
            pass: !num.is_zero(),
            min_ratio: Some((num, den)),
            pairs_tested: pairs,
            worst_pair: Some((points[i].clone(), points[j].clone())),
        },
    })
}

fn ratio(num: &BigUint, den: &BigUint) -> f64 {
    let shift = num.bits().max(den.bits()).saturating_sub(900);
    let n = (num >> shift).to_f64().unwrap_or(f64::INFINITY);
    let d = (den >> shift).to_f64().unwrap_or(f64::INFINITY);
    n / d
}

/// All integer offsets with `ℓ₁` norm at most `r`.
fn offsets(d: usize, r: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0i64; d];
    build(0, i64::from(r), &mut cur, &mut out);
    out
}

fn build(pos: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if pos == cur.len() {
        out.push(cur.clone());
        return;
    }
    for v in -budget..=budget {
        cur[pos] = v;
        build(pos + 1, budget - v.abs(), cur, out);
    }
    cur[pos] = 0;
}
