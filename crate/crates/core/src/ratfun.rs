//! Rational functions in f and t over a cyclotomic field: the field
//! F = Q(zeta)(f, t) that all algebras in this crate are defined over.
//!
//! Fractions are not reduced to lowest terms (no multivariate gcd);
//! common monomial factors f^k * t^l of numerator and denominator are
//! cancelled, and equality is decided by cross-multiplication.

use std::fmt;

use crate::bipoly::BivariatePolynomial;
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct RationalFunction2 {
    num: BivariatePolynomial,
    den: BivariatePolynomial,
}

impl RationalFunction2 {
    pub fn new(num: BivariatePolynomial, den: BivariatePolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RationalFunction2 { num, den };
        r.reduce_content();
        Ok(r)
    }

    pub fn from_poly(p: BivariatePolynomial) -> Self {
        RationalFunction2 {
            num: p,
            den: BivariatePolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(BivariatePolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BivariatePolynomial::one())
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        Self::from_poly(BivariatePolynomial::constant(c))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_poly(BivariatePolynomial::from_integer(n))
    }

    pub fn num(&self) -> &BivariatePolynomial {
        &self.num
    }

    pub fn den(&self) -> &BivariatePolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Cancel monomial content f^k * t^l common to numerator and
    /// denominator. This is the only normalization performed.
    pub fn reduce_content(&mut self) {
        if self.num.is_zero() {
            self.den = BivariatePolynomial::one();
            return;
        }
        let (nf, nt) = self.num.monomial_content();
        let (df, dt) = self.den.monomial_content();
        let (i, j) = (nf.min(df), nt.min(dt));
        if (i, j) != (0, 0) {
            self.num = self.num.shift_down(i, j);
            self.den = self.den.shift_down(i, j);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("nonzero denominator product")
    }

    pub fn neg(&self) -> Self {
        RationalFunction2 {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator product")
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        RationalFunction2 {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Cross-multiplication equality: p/q = r/s iff p*s = r*q.
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl PartialEq for RationalFunction2 {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for RationalFunction2 {}

impl fmt::Display for RationalFunction2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &BivariatePolynomial| {
            let s = p.to_string();
            if p.num_terms() > 1 || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::poly_i64;

    fn f_over_f_minus_t() -> RationalFunction2 {
        RationalFunction2::new(poly_i64(&[(1, 0, 1)]), poly_i64(&[(1, 0, 1), (0, 1, -1)])).unwrap()
    }

    #[test]
    fn cross_multiplication_equality() {
        // f/(f-t) == f*t / ((f-t)*t)
        let a = f_over_f_minus_t();
        let b = RationalFunction2::new(
            poly_i64(&[(1, 1, 1)]),
            poly_i64(&[(1, 0, 1), (0, 1, -1)]).mul(&poly_i64(&[(0, 1, 1)])),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = f_over_f_minus_t();
        let product = a.mul(&a.inv().unwrap());
        assert!(product.equals(&RationalFunction2::one()));
    }

    #[test]
    fn common_denominator_addition() {
        // f/(f-t) + t/(f-t) = (f+t)/(f-t)
        let den = poly_i64(&[(1, 0, 1), (0, 1, -1)]);
        let a = RationalFunction2::new(poly_i64(&[(1, 0, 1)]), den.clone()).unwrap();
        let b = RationalFunction2::new(poly_i64(&[(0, 1, 1)]), den.clone()).unwrap();
        let expect = RationalFunction2::new(poly_i64(&[(1, 0, 1), (0, 1, 1)]), den).unwrap();
        assert_eq!(a.add(&b), expect);
    }

    #[test]
    fn zero_inversion_fails() {
        assert_eq!(
            RationalFunction2::zero().inv().unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn content_cancellation() {
        // (f^2*t) / (f*t^2) reduces to f/t.
        let r = RationalFunction2::new(poly_i64(&[(2, 1, 1)]), poly_i64(&[(1, 2, 1)])).unwrap();
        assert_eq!(r.num(), &poly_i64(&[(1, 0, 1)]));
        assert_eq!(r.den(), &poly_i64(&[(0, 1, 1)]));
    }

    #[test]
    fn display_matches_grammar() {
        let a = f_over_f_minus_t();
        assert_eq!(a.to_string(), "f/(f - t)");
        let b = RationalFunction2::new(
            poly_i64(&[(1, 0, 1), (0, 2, -1)]),
            poly_i64(&[(1, 0, 1), (0, 1, -1), (0, 2, -1)]),
        )
        .unwrap();
        assert_eq!(b.to_string(), "(f - t^2)/(f - t - t^2)");
    }
}
