use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::MultiPoly;
use super::PolyError;

/// A rational function `G / H` with `H(0) != 0`, normalized so that the
/// joint integer content is 1 and `H(0) > 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSeries {
    numerator: MultiPoly,
    denominator: MultiPoly,
}

impl RationalSeries {
    pub fn new(numerator: MultiPoly, denominator: MultiPoly) -> Result<Self, PolyError> {
        if numerator.nvars() != denominator.nvars() {
            return Err(PolyError::VariableMismatch {
                left: numerator.nvars(),
                right: denominator.nvars(),
            });
        }
        let h0 = denominator.constant_term();
        if h0.is_zero() {
            return Err(PolyError::SingularAtOrigin);
        }
        let mut g = numerator.content().gcd(&denominator.content());
        if h0.is_negative() {
            g = -g;
        }
        let (numerator, denominator) = if g == BigInt::from(1) {
            (numerator, denominator)
        } else {
            (
                numerator.div_scalar(&g).expect("content divides"),
                denominator.div_scalar(&g).expect("content divides"),
            )
        };
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.denominator
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    /// Divides out every common factor of the form `1 - z_i` or `1 + z_i`.
    ///
    /// This is the only cancellation performed; no general multivariate
    /// gcd is attempted.
    pub fn cancel_binomial_factors(&self) -> RationalSeries {
        let d = self.nvars();
        let mut g = self.numerator.clone();
        let mut h = self.denominator.clone();
        for i in 0..d {
            for sign in [-1i64, 1] {
                let f = &MultiPoly::one(d) + &MultiPoly::var(d, i).scale(&BigInt::from(sign));
                loop {
                    if g.is_zero() {
                        break;
                    }
                    match (g.div_exact(&f), h.div_exact(&f)) {
                        (Some(gq), Some(hq)) => {
                            g = gq;
                            h = hq;
                        }
                        _ => break,
                    }
                }
            }
        }
        RationalSeries::new(g, h).expect("cancelled factors are 1 at the origin")
    }

    /// `G * other.H == other.G * H`.
    pub fn same_function(&self, other: &RationalSeries) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl core::fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let wrap = |p: &MultiPoly| p.len() > 1;
        if wrap(&self.numerator) {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        f.write_str(" / ")?;
        if wrap(&self.denominator) {
            write!(f, "({})", self.denominator)
        } else {
            write!(f, "{}", self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn content_and_sign_normalized() {
        let g = MultiPoly::constant(1, -2);
        let h = &MultiPoly::constant(1, -4) + &MultiPoly::var(1, 0).scale(&BigInt::from(6));
        let s = RationalSeries::new(g, h).unwrap();
        assert_eq!(s.to_string(), "1 / (2 - 3*z1)");
    }

    #[test]
    fn origin_pole_rejected() {
        let r = RationalSeries::new(MultiPoly::one(1), MultiPoly::var(1, 0));
        assert_eq!(r, Err(PolyError::SingularAtOrigin));
    }
}
