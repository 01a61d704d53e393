use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::Monomial;
use super::PolyError;

/// Sparse polynomial in `nvars` variables with arbitrary-precision
/// integer coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic that rejects mismatched variable counts.
pub fn poly_arith(op: ArithOp, p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if p.nvars != q.nvars {
        return Err(PolyError::VariableMismatch {
            left: p.nvars,
            right: q.nvars,
        });
    }
    Ok(match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    })
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c.into());
        p
    }

    /// The variable `z_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, index), BigInt::one());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::ExponentLength {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(Monomial::new(e), c);
        }
        Ok(p)
    }

    /// Shorthand for small literal polynomials.
    pub fn from_i64_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial::new(e.to_vec()), BigInt::from(*c));
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        let remove = {
            let slot = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *slot += c;
            slot.is_zero()
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Whether some monomial has a positive exponent in variable `index`.
    pub fn depends_on(&self, index: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[index] > 0)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of all coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division by an integer; `None` unless every coefficient is divisible.
    pub fn div_scalar(&self, c: &BigInt) -> Option<MultiPoly> {
        if c.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, divisor.nvars, "variable count mismatch");
        let (lm, lc) = divisor.leading_term()?;
        let mut rest = self.clone();
        let mut quotient = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rest.leading_term() {
            let qm = m.div(lm)?;
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let mut t = MultiPoly::zero(self.nvars);
            t.add_term(qm, qc);
            rest = &rest - &(&t * divisor);
            quotient = &quotient + &t;
        }
        Some(quotient)
    }

    /// Partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[index] -= 1;
            out.add_term(Monomial::new(ex), c * BigInt::from(e));
        }
        out
    }

    /// Sets variable `index` to zero.
    pub fn restrict_zero(&self, index: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents()[index] == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `z_i -> z_{map[i]}` into a polynomial over `nvars` variables.
    pub fn relabel(&self, map: &[usize], nvars: usize) -> MultiPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut ex = alloc::vec![0u32; nvars];
            for (i, &e) in m.exponents().iter().enumerate() {
                ex[map[i]] += e;
            }
            out.add_term(Monomial::new(ex), c.clone());
        }
        out
    }

    /// Floating evaluation with Neumaier-compensated summation.
    pub fn eval(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.nvars, "point dimension mismatch");
        let mut acc = Neumaier::default();
        for (m, c) in &self.terms {
            acc.add(big_to_f64(c) * m.eval(x));
        }
        acc.sum()
    }

    /// All first partial derivatives at `x`.
    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.nvars, "point dimension mismatch");
        let mut acc: Vec<Neumaier> = (0..self.nvars).map(|_| Neumaier::default()).collect();
        for (m, c) in &self.terms {
            let cf = big_to_f64(c);
            for (k, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut v = cf * f64::from(e);
                for (j, &ej) in m.exponents().iter().enumerate() {
                    let p = if j == k { ej - 1 } else { ej };
                    if p > 0 {
                        v *= super::monomial::powi(x[j], p);
                    }
                }
                acc[k].add(v);
            }
        }
        acc.into_iter().map(|a| a.sum()).collect()
    }

    /// Exact evaluation at integer points.
    pub fn eval_integer(&self, x: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.nvars);
        let mut s = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (xi, &e) in x.iter().zip(m.exponents()) {
                v *= num_traits::pow(xi.clone(), e as usize);
            }
            s += v;
        }
        s
    }

    /// True when the constant term is 1 and every other coefficient is negative,
    /// i.e. `1 - (polynomial with positive coefficients)`.
    pub fn is_one_minus_positive(&self) -> bool {
        self.constant_term().is_one()
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_one() || c.sign() == Sign::Minus)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

#[derive(Default, Clone, Copy)]
pub(crate) struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn sum(&self) -> f64 {
        self.sum + self.comp
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly {
            nvars: self.nvars,
            terms: acc,
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn z(d: usize, i: usize) -> MultiPoly {
        MultiPoly::var(d, i)
    }

    #[test]
    fn expansion_and_cancellation() {
        let one = MultiPoly::one(2);
        let p = &(&one + &z(2, 0)) * &(&one + &z(2, 1));
        assert_eq!(p.to_string(), "1 + z1 + z2 + z1*z2");
        let r = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], -3)]);
        let s = MultiPoly::from_i64_terms(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 3)]);
        assert!((&r + &s).is_one());
        assert_eq!(r.to_string(), "1 - z1 - z2 - 3*z1*z2");
    }

    #[test]
    fn arith_rejects_mismatch() {
        let e = poly_arith(ArithOp::Add, &MultiPoly::one(2), &MultiPoly::one(3));
        assert_eq!(e, Err(PolyError::VariableMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn exact_division() {
        let one = MultiPoly::one(2);
        let a = &one - &z(2, 0);
        let b = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], -3)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(b.div_exact(&(&one + &z(2, 1))), None);
    }

    #[test]
    fn evaluation_points() {
        let h = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], -3)]);
        assert!(h.eval(&[1.0 / 3.0, 1.0 / 3.0]).abs() < 1e-15);
        let fib = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], -1)]);
        assert_eq!(fib.eval(&[0.5, 1.0]), 0.0);
        let zz = &z(2, 0) * &z(2, 1);
        assert_eq!(zz.gradient(&[1.0, 1.0]), alloc::vec![1.0, 1.0]);
    }

    #[test]
    fn derivative_matches_gradient() {
        let p = MultiPoly::from_i64_terms(2, &[(&[3, 1], 2), (&[0, 2], -5), (&[1, 0], 7)]);
        let x = [0.7, -1.3];
        let g = p.gradient(&x);
        for k in 0..2 {
            assert!((p.derivative(k).eval(&x) - g[k]).abs() < 1e-12);
        }
    }
}
