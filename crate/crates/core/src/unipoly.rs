//! Dense univariate polynomials and rational functions over a cyclotomic
//! field, used as residue-field elements and as coefficient machinery for
//! bivariate division.
//!
//! `UniPoly` stores coefficients in ascending degree; the zero polynomial
//! is the empty vector and the last stored coefficient is always nonzero.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<CyclotomicNumber>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(CyclotomicNumber::one(1))
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial c * x^deg.
    pub fn monomial(c: CyclotomicNumber, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![CyclotomicNumber::zero(1); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn var() -> Self {
        Self::monomial(CyclotomicNumber::one(1), 1)
    }

    pub fn from_coeffs(coeffs: Vec<CyclotomicNumber>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[CyclotomicNumber] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&CyclotomicNumber> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![CyclotomicNumber::zero(1); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![CyclotomicNumber::zero(1); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Division with remainder; the divisor must be nonzero.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead_inv = d.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quo =
            vec![CyclotomicNumber::zero(1); rem.coeffs.len().saturating_sub(d.coeffs.len()) + 1];
        while rem.coeffs.len() >= d.coeffs.len() && !rem.is_zero() {
            let shift = rem.coeffs.len() - d.coeffs.len();
            let c = rem.leading().unwrap().mul(&lead_inv);
            quo[shift] = c.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem.coeffs[shift + i] = rem.coeffs[shift + i].sub(&dc.mul(&c));
            }
            rem.trim();
        }
        Ok((Self::from_coeffs(quo), rem))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d).ok()?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Scale to leading coefficient one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&BigRational::from_integer((i as i64).into())))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Monic greatest common divisor (Euclid); gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor in gcd loop");
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// Multiplicity of x dividing the polynomial (index of the first
    /// nonzero coefficient); zero polynomial yields `None`.
    pub fn x_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divide by x^k; all coefficients below k must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(self.x_valuation().is_none_or(|v| v >= k));
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Squarefree decomposition by Yun's algorithm: returns pairwise
    /// coprime monic squarefree parts with multiplicities, together with
    /// the constant such that constant * prod(part_i ^ mult_i) = self.
    pub fn squarefree_decomposition(&self) -> (CyclotomicNumber, Vec<(Self, u32)>) {
        if self.is_zero() {
            return (CyclotomicNumber::zero(1), Vec::new());
        }
        let lead = self.leading().unwrap().clone();
        let f = self.monic();
        if f.degree() == Some(0) || f.is_one() {
            return (lead, Vec::new());
        }
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut b = f.exact_div(&g).expect("gcd divides");
        let mut d = df
            .exact_div(&g)
            .expect("gcd divides derivative")
            .sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1u32;
        while b.degree().is_some_and(|deg| deg > 0) {
            let a = b.gcd(&d);
            if a.degree().is_some_and(|deg| deg > 0) {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("factor divides");
            let c = d.exact_div(&a).expect("factor divides");
            d = c.sub(&b.derivative());
            i += 1;
        }
        (lead, out)
    }

    fn render(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign_neg, mag) = match c.as_rational() {
                Some(q) => (q.is_negative(), None),
                None => (false, Some(c)),
            };
            if wrote {
                write!(f, " {} ", if sign_neg { "-" } else { "+" })?;
            } else if sign_neg {
                write!(f, "-")?;
            }
            let coeff_str = match (mag, c.as_rational()) {
                (Some(cy), _) => Some(format!("({cy})")),
                (None, Some(q)) => {
                    let a = q.abs();
                    if a.is_one() && i > 0 {
                        None
                    } else {
                        Some(format!("{a}"))
                    }
                }
                _ => unreachable!(),
            };
            match (coeff_str, i) {
                (Some(s), 0) => write!(f, "{s}")?,
                (Some(s), 1) => write!(f, "{s}*{var}")?,
                (Some(s), _) => write!(f, "{s}*{var}^{i}")?,
                (None, 1) => write!(f, "{var}")?,
                (None, _) => write!(f, "{var}^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render("x", f)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// A univariate rational function over the cyclotomic field, kept with a
/// monic denominator and with common powers of x cancelled (full gcd
/// reduction is not performed; equality is by cross-multiplication).
#[derive(Clone)]
pub struct UniRatFun {
    num: UniPoly,
    den: UniPoly,
}

impl UniRatFun {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = UniRatFun { num, den };
        r.canonicalize();
        Ok(r)
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self::new(p, UniPoly::one()).expect("one is nonzero")
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let k = self
            .num
            .x_valuation()
            .unwrap()
            .min(self.den.x_valuation().unwrap());
        if k > 0 {
            self.num = self.num.shift_down(k);
            self.den = self.den.shift_down(k);
        }
        let lead_inv = self.den.leading().unwrap().inv().expect("nonzero");
        self.num = self.num.scale(&lead_inv);
        self.den = self.den.scale(&lead_inv);
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero den")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl PartialEq for UniRatFun {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for UniRatFun {}

impl fmt::Display for UniRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &UniPoly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for UniRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniRatFun({self})")
    }
}

/// A nonzero residue-field element in factored form: a constant times a
/// product of monic squarefree pairwise-coprime polynomial factors with
/// integer exponents. Factors are asserted (not verified) irreducible by
/// producers that need exact power-class orders; pairwise-coprime
/// squarefree factors already make the exponent test exact.
#[derive(Clone, Debug)]
pub struct FactoredUni {
    constant: CyclotomicNumber,
    factors: Vec<(UniPoly, i64)>,
}

impl FactoredUni {
    pub fn one() -> Self {
        FactoredUni {
            constant: CyclotomicNumber::one(1),
            factors: Vec::new(),
        }
    }

    pub fn constant(&self) -> &CyclotomicNumber {
        &self.constant
    }

    pub fn factors(&self) -> &[(UniPoly, i64)] {
        &self.factors
    }

    /// Multiply in `p^e` for a nonzero polynomial `p`, refining the factor
    /// list so it stays monic, squarefree and pairwise coprime.
    pub fn mul_poly_power(&mut self, p: &UniPoly, e: i64) -> Result<()> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if e == 0 {
            return Ok(());
        }
        let (lead, parts) = p.squarefree_decomposition();
        self.constant = self.constant.mul(&lead.pow(e).expect("nonzero lead"));
        for (part, mult) in parts {
            self.insert_coprime(part, mult as i64 * e);
        }
        Ok(())
    }

    pub fn mul_constant(&mut self, c: &CyclotomicNumber) -> Result<()> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.constant = self.constant.mul(c);
        Ok(())
    }

    pub fn mul_factored(&mut self, other: &FactoredUni) {
        self.constant = self.constant.mul(&other.constant);
        for (p, e) in &other.factors {
            self.insert_coprime(p.clone(), *e);
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut out = FactoredUni {
            constant: self.constant.pow(e).expect("nonzero constant"),
            factors: Vec::new(),
        };
        for (p, d) in &self.factors {
            out.insert_coprime(p.clone(), d * e);
        }
        out
    }

    // `p` must be monic, squarefree and nonconstant.
    fn insert_coprime(&mut self, mut p: UniPoly, e: i64) {
        if e == 0 {
            return;
        }
        let mut appended: Vec<(UniPoly, i64)> = Vec::new();
        let mut replaced: Vec<(usize, Option<UniPoly>)> = Vec::new();
        for (idx, (q, d)) in self.factors.iter().enumerate() {
            if p.degree().is_none_or(|deg| deg == 0) {
                break;
            }
            let g = p.gcd(q);
            if g.degree().is_none_or(|deg| deg == 0) {
                continue;
            }
            p = p.exact_div(&g).expect("gcd divides");
            let qh = q.exact_div(&g).expect("gcd divides");
            if qh.degree().is_none_or(|deg| deg == 0) {
                // q = g entirely: merge exponents in place.
                replaced.push((idx, None));
                if d + e != 0 {
                    appended.push((g, d + e));
                }
            } else {
                replaced.push((idx, Some(qh)));
                appended.push((g, d + e));
            }
        }
        for (idx, repl) in replaced.into_iter().rev() {
            match repl {
                Some(qh) => self.factors[idx].0 = qh,
                None => {
                    self.factors.remove(idx);
                }
            }
        }
        self.factors.extend(appended);
        if p.degree().is_some_and(|deg| deg > 0) {
            self.factors.push((p, e));
        }
        self.factors.retain(|(_, d)| *d != 0);
    }

    /// Expand the factored form back to a rational function.
    pub fn expand(&self) -> UniRatFun {
        let mut num = UniPoly::constant(self.constant.clone());
        let mut den = UniPoly::one();
        for (p, e) in &self.factors {
            if *e > 0 {
                num = num.mul(&p.pow(*e as u32));
            } else {
                den = den.mul(&p.pow((-e) as u32));
            }
        }
        UniRatFun::new(num, den).expect("nonzero denominator")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn c(n: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_integer(1, n)
    }

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&n| c(n)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = poly(&[2, 0, -3, 1]);
        let d = poly(&[-1, 1]);
        let (q, r) = a.divrem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), a);
    }

    #[test]
    fn gcd_of_common_factor() {
        // (x-1)(x+2) and (x-1)(x-3) have monic gcd x-1.
        let a = poly(&[-1, 1]).mul(&poly(&[2, 1]));
        let b = poly(&[-1, 1]).mul(&poly(&[-3, 1]));
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
    }

    #[test]
    fn squarefree_split() {
        // 2 * x * (x+1)^2
        let p = poly(&[0, 1])
            .mul(&poly(&[1, 1]))
            .mul(&poly(&[1, 1]))
            .scale(&c(2));
        let (lead, parts) = p.squarefree_decomposition();
        assert_eq!(lead, c(2));
        assert_eq!(parts, vec![(poly(&[0, 1]), 1), (poly(&[1, 1]), 2)]);
    }

    #[test]
    fn ratfun_canonical_form() {
        // (-x - x^2) / (-x^2) == (1 + x)/x
        let num = poly(&[0, -1, -1]);
        let den = poly(&[0, 0, -1]);
        let r = UniRatFun::new(num, den).unwrap();
        assert_eq!(r.to_string(), "(1 + x)/x");
        let s = UniRatFun::new(poly(&[1, 1]), poly(&[0, 1])).unwrap();
        assert_eq!(r, s);
    }

    #[test]
    fn factored_refinement() {
        // Insert x^2 - 1 then x - 1: factors refine to coprime pieces.
        let mut fr = FactoredUni::one();
        fr.mul_poly_power(&poly(&[-1, 0, 1]), 1).unwrap();
        fr.mul_poly_power(&poly(&[-1, 1]), 2).unwrap();
        let expanded = fr.expand();
        let direct =
            UniRatFun::from_poly(poly(&[-1, 0, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[-1, 1])));
        assert_eq!(expanded, direct);
        // All factors pairwise coprime.
        for (i, (p, _)) in fr.factors().iter().enumerate() {
            for (q, _) in fr.factors().iter().skip(i + 1) {
                assert_eq!(p.gcd(q), UniPoly::one());
            }
        }
    }

    #[test]
    fn factored_with_scale() {
        let mut fr = FactoredUni::one();
        fr.mul_constant(&CyclotomicNumber::from_rational(1, rat(3) / rat(2)))
            .unwrap();
        fr.mul_poly_power(&poly(&[0, 2]), -1).unwrap(); // (2x)^-1
        let expanded = fr.expand();
        let expect = UniRatFun::new(poly(&[3]), poly(&[0, 4])).unwrap();
        assert_eq!(expanded, expect);
    }
}
