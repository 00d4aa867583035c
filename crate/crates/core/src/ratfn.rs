//! Quotients of polynomials. Pairs are not reduced to lowest terms
//! (multivariate gcd is out of scope); the denominator is normalized to
//! have leading coefficient 1, and equality is decided by the
//! cross-multiplication identity num1*den2 - num2*den1 == 0.

use num_traits::One;

use crate::poly::{Poly, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.nvars() != den.nvars() {
            return Err(Error::ArityMismatch {
                expected: num.nvars(),
                got: den.nvars(),
            });
        }
        let lc = den.leading().unwrap().1.clone();
        if lc.is_one() {
            Ok(RationalFn { num, den })
        } else {
            let inv = Rational::one() / lc;
            Ok(RationalFn {
                num: num.scale(&inv),
                den: den.scale(&inv),
            })
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.nvars();
        RationalFn {
            num: p,
            den: Poly::one(n),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality as rational functions: num1*den2 == num2*den1.
    pub fn equivalent(&self, other: &RationalFn) -> Result<bool> {
        let lhs = self.num.mul(&other.den)?;
        let rhs = other.num.mul(&self.den)?;
        Ok(lhs == rhs)
    }

    pub fn add(&self, other: &RationalFn) -> Result<RationalFn> {
        let num = self
            .num
            .mul(&other.den)?
            .add(&other.num.mul(&self.den)?)?;
        RationalFn::new(num, self.den.mul(&other.den)?)
    }

    pub fn sub(&self, other: &RationalFn) -> Result<RationalFn> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFn) -> Result<RationalFn> {
        RationalFn::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn scale(&self, c: &Rational) -> RationalFn {
        RationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RationalFn> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, q: u32) -> RationalFn {
        RationalFn {
            num: self.num.pow(q),
            den: self.den.pow(q),
        }
    }

    /// Quotient-rule partial derivative: (n/d)' = (n'd - nd')/d^2.
    pub fn diff(&self, var: usize) -> Result<RationalFn> {
        let n_term = self.num.diff(var)?.mul(&self.den)?;
        let d_term = self.num.mul(&self.den.diff(var)?)?;
        RationalFn::new(n_term.sub(&d_term)?, self.den.pow(2))
    }

    /// Exact evaluation; None where the denominator vanishes.
    pub fn eval(&self, point: &[Rational]) -> Result<Option<Rational>> {
        let d = self.den.eval(point)?;
        if num_traits::Zero::is_zero(&d) {
            return Ok(None);
        }
        Ok(Some(self.num.eval(point)? / d))
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.num.eval_f64(point) / self.den.eval_f64(point)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::text::parse_poly;

    #[test]
    fn normalization_and_equality() {
        let n = parse_poly("x1^2", 0).unwrap();
        let d = parse_poly("2*x1", 0).unwrap();
        let f = RationalFn::new(n, d).unwrap();
        assert_eq!(f.den().leading().unwrap().1, &rat(1));
        let g = RationalFn::new(
            parse_poly("x1^3", 0).unwrap(),
            parse_poly("2*x1^2", 0).unwrap(),
        )
        .unwrap();
        assert!(f.equivalent(&g).unwrap());
    }

    #[test]
    fn derivative_of_reciprocal() {
        // d/dx (1/x) = -1/x^2, second derivative 2/x^3
        let f = RationalFn::new(Poly::one(1), Poly::var(1, 0)).unwrap();
        let d1 = f.diff(0).unwrap();
        let expect1 = RationalFn::new(Poly::constant(1, rat(-1)), Poly::var(1, 0).pow(2)).unwrap();
        assert!(d1.equivalent(&expect1).unwrap());
        let d2 = d1.diff(0).unwrap();
        let expect2 = RationalFn::new(Poly::constant(1, rat(2)), Poly::var(1, 0).pow(3)).unwrap();
        assert!(d2.equivalent(&expect2).unwrap());
    }

    #[test]
    fn eval_none_on_pole() {
        let f = RationalFn::new(Poly::one(1), Poly::var(1, 0)).unwrap();
        assert_eq!(f.eval(&[rat(0)]).unwrap(), None);
        assert_eq!(f.eval(&[rat(2)]).unwrap(), Some(crate::poly::ratio(1, 2)));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFn::new(Poly::one(2), Poly::zero(2)).is_err());
    }
}
