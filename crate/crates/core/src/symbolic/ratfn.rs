use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::IntPolynomial;

/// A quotient of integer polynomials in `q`. No cancellation is attempted, so
/// the displayed form stays close to how the expression was written.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        RationalFunction {
            numerator,
            denominator,
        }
    }

    pub fn constant(num: i64, den: i64) -> Self {
        Self::new(IntPolynomial::constant(num), IntPolynomial::constant(den))
    }

    pub fn one() -> Self {
        Self::constant(1, 1)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.numerator.pow(e), self.denominator.pow(e))
    }

    /// Exact value at `q`, or `None` where the denominator vanishes.
    pub fn eval(&self, q: &BigInt) -> Option<BigRational> {
        let den = self.denominator.eval(q);
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(self.numerator.eval(q), den))
    }

    pub fn eval_i64(&self, q: i64) -> Option<BigRational> {
        self.eval(&BigInt::from(q))
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator == IntPolynomial::one()
    }
}

impl From<IntPolynomial> for RationalFunction {
    fn from(p: IntPolynomial) -> Self {
        RationalFunction::new(p, IntPolynomial::one())
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;

    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &self.numerator * &rhs.denominator,
            &self.denominator * &rhs.numerator,
        )
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;

    fn div(self, rhs: RationalFunction) -> RationalFunction {
        &self / &rhs
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn eval_and_display() {
        let q = IntPolynomial::q();
        let f = RationalFunction::new(&q + &IntPolynomial::one(), IntPolynomial::q_pow_plus(2, -1));
        assert_eq!(f.eval_i64(2).unwrap(), BigRational::new(3.into(), 3.into()));
        assert!(f.eval_i64(1).is_none());
        assert_eq!(f.to_string(), "(q + 1) / (q^2 - 1)");
        let g = RationalFunction::from(q.clone());
        assert_eq!(g.to_string(), "q");
        assert_eq!((&f * &g).eval_i64(3).unwrap(), BigRational::new(12.into(), 8.into()));
        assert_eq!((&f / &g).eval_i64(3).unwrap(), BigRational::new(4.into(), 24.into()));
        assert!(RationalFunction::one().eval_i64(0).unwrap().is_one());
    }
}
