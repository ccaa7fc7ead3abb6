//! Sparse bivariate polynomials in the variables f and t over a
//! cyclotomic field.
//!
//! Terms are keyed by the exponent pair (i, j) of f^i * t^j in a BTreeMap,
//! so iteration order is the lexicographic monomial order on (i, j) that
//! the rank-two valuation reads off directly. Zero coefficients are never
//! stored.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::cyclotomic::CyclotomicNumber;
use crate::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), CyclotomicNumber>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CyclotomicNumber::one(1))
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(CyclotomicNumber::from_integer(1, n))
    }

    /// c * f^i * t^j
    pub fn monomial(i: u32, j: u32, c: CyclotomicNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivariatePolynomial { terms }
    }

    pub fn var_f() -> Self {
        Self::monomial(1, 0, CyclotomicNumber::one(1))
    }

    pub fn var_t() -> Self {
        Self::monomial(0, 1, CyclotomicNumber::one(1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), CyclotomicNumber)>) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &CyclotomicNumber)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lexicographically smallest monomial exponent pair.
    pub fn min_monomial(&self) -> Option<(u32, u32)> {
        self.terms.keys().next().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn constant_value(&self) -> Option<CyclotomicNumber> {
        if self.is_zero() {
            return Some(CyclotomicNumber::zero(1));
        }
        if self.is_constant() {
            return self.terms.get(&(0, 0)).cloned();
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (*k, x.mul(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Degree in f, ignoring t. Zero polynomial yields `None`.
    pub fn deg_f(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Largest k with f^k dividing every term (and likewise for t).
    pub fn monomial_content(&self) -> (u32, u32) {
        let fi = self.terms.keys().map(|&(i, _)| i).min().unwrap_or(0);
        let tj = self.terms.keys().map(|&(_, j)| j).min().unwrap_or(0);
        (fi, tj)
    }

    /// Exact division by f^i * t^j; every term must have large enough
    /// exponents.
    pub fn shift_down(&self, i: u32, j: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| {
                    assert!(a >= i && b >= j, "monomial shift below zero");
                    ((a - i, b - j), c.clone())
                })
                .collect(),
        }
    }

    /// View as a polynomial in f whose coefficients are polynomials in t:
    /// entry k is the coefficient of f^k.
    pub fn f_coefficients(&self) -> Vec<UniPoly> {
        let deg = match self.deg_f() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![Vec::new(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let v: &mut Vec<CyclotomicNumber> = &mut out[i as usize];
            if v.len() <= j as usize {
                v.resize(j as usize + 1, CyclotomicNumber::zero(1));
            }
            v[j as usize] = c.clone();
        }
        out.into_iter().map(UniPoly::from_coeffs).collect()
    }

    pub fn from_f_coefficients(coeffs: &[UniPoly]) -> Self {
        let mut out = Self::zero();
        for (i, p) in coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    /// Substitute t = 0, producing a univariate polynomial in f.
    pub fn at_t_zero(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                if coeffs.len() <= i as usize {
                    coeffs.resize(i as usize + 1, CyclotomicNumber::zero(1));
                }
                coeffs[i as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitute f = 0, producing a univariate polynomial in t.
    pub fn at_f_zero(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            if i == 0 {
                if coeffs.len() <= j as usize {
                    coeffs.resize(j as usize + 1, CyclotomicNumber::zero(1));
                }
                coeffs[j as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitute f = g(t), producing a univariate polynomial in t.
    pub fn substitute_f(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for p in self.f_coefficients().iter().rev() {
            acc = acc.mul(g).add(p);
        }
        acc
    }

    /// Componentwise maximal exponents (deg_f, deg_t); the zero
    /// polynomial yields `None`.
    pub fn max_exponents(&self) -> Option<(u32, u32)> {
        if self.is_zero() {
            return None;
        }
        let fi = self.terms.keys().map(|&(i, _)| i).max().unwrap();
        let tj = self.terms.keys().map(|&(_, j)| j).max().unwrap();
        Some((fi, tj))
    }

    /// Exact division by trailing terms: repeatedly cancel the
    /// lexicographically least monomial. Equivalent to `exact_divide` but
    /// without intermediate fraction bookkeeping; callers that already
    /// know the division is exact use this route.
    pub fn exact_divide_trailing(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (di, dj) = d.min_monomial().unwrap();
        let d_min_inv = d.terms[&(di, dj)]
            .inv()
            .expect("nonzero trailing coefficient");
        let (pf, pt) = self.max_exponents().unwrap();
        let (df, dt) = d.max_exponents().unwrap();
        // Degrees are additive in each variable, so the quotient is
        // confined to this rectangle.
        if pf < df || pt < dt {
            return None;
        }
        let (qf, qt) = (pf - df, pt - dt);
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some((ri, rj)) = rem.min_monomial() {
            if ri < di || rj < dj {
                return None;
            }
            let (mi, mj) = (ri - di, rj - dj);
            if mi > qf || mj > qt {
                return None;
            }
            let mc = rem.terms[&(ri, rj)].mul(&d_min_inv);
            quo.add_term(mi, mj, mc.clone());
            for (&(a, b), c) in &d.terms {
                rem.add_term(a + mi, b + mj, c.mul(&mc).neg());
            }
        }
        Some(quo)
    }

    /// True when the polynomial is monic viewed in (Q(zeta)(t))[f]: the
    /// coefficient of the top power of f is the constant 1.
    pub fn is_monic_in_f(&self) -> bool {
        match self.deg_f() {
            None => false,
            Some(d) => {
                let lead: Vec<_> = self.terms.iter().filter(|(&(i, _), _)| i == d).collect();
                lead.len() == 1 && lead[0].0 .1 == 0 && lead[0].1.is_one()
            }
        }
    }

    /// Exact division: returns q with self = d * q when d divides exactly.
    /// Decided by long division in f over the fraction field in t, followed
    /// by a denominator-clearing check on the quotient coefficients.
    pub fn exact_divide(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.deg_f().unwrap() as usize;
        let nd = self.deg_f().unwrap() as usize;
        if nd < dd {
            return None;
        }
        let d_coeffs = d.f_coefficients();
        let d_lead = &d_coeffs[dd];
        // Remainder as rem_num / rem_den with a shared denominator in t.
        let mut rem_num = self.f_coefficients();
        let mut rem_den = UniPoly::one();
        // Quotient coefficients as (numerator, denominator) pairs.
        let mut quo: Vec<Option<(UniPoly, UniPoly)>> = vec![None; nd - dd + 1];
        loop {
            while rem_num.last().is_some_and(|p| p.is_zero()) {
                rem_num.pop();
            }
            if rem_num.len() < d_coeffs.len() {
                break;
            }
            let shift = rem_num.len() - d_coeffs.len();
            let lead = rem_num.last().unwrap().clone();
            // quotient coefficient = lead / (rem_den * d_lead)
            quo[shift] = Some((lead.clone(), rem_den.mul(d_lead)));
            // rem := rem - (lead / (rem_den * d_lead)) * f^shift * d
            //     = (rem_num * d_lead - lead * d) / (rem_den * d_lead)
            let mut next: Vec<UniPoly> = rem_num.iter().map(|p| p.mul(d_lead)).collect();
            for (k, dc) in d_coeffs.iter().enumerate() {
                next[shift + k] = next[shift + k].sub(&lead.mul(dc));
            }
            debug_assert!(next.last().unwrap().is_zero());
            rem_num = next;
            rem_den = rem_den.mul(d_lead);
        }
        if rem_num.iter().any(|p| !p.is_zero()) {
            return None;
        }
        // Clear denominators: each quotient coefficient must be polynomial.
        let mut out_coeffs = Vec::with_capacity(quo.len());
        for entry in quo {
            match entry {
                None => out_coeffs.push(UniPoly::zero()),
                Some((num, den)) => {
                    let p = num.exact_div(&den)?;
                    out_coeffs.push(p)
                }
            }
        }
        let q = Self::from_f_coefficients(&out_coeffs);
        debug_assert_eq!(q.mul(d), *self);
        Some(q)
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Canonical rendering: terms sorted by descending f-exponent, then
    /// ascending t-exponent, e.g. `f - t - t^2`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut wrote = false;
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let (neg, coeff_str) = match c.as_rational() {
                Some(q) => {
                    let mag = q.abs();
                    let s = if mag.is_one() && (i, j) != (0, 0) {
                        None
                    } else {
                        Some(format!("{mag}"))
                    };
                    (q.is_negative(), s)
                }
                None => (false, Some(format!("({c})"))),
            };
            if wrote {
                write!(out, " {} ", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(out, "-")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if let Some(s) = coeff_str {
                parts.push(s);
            }
            match i {
                0 => {}
                1 => parts.push("f".into()),
                _ => parts.push(format!("f^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("t".into()),
                _ => parts.push(format!("t^{j}")),
            }
            write!(out, "{}", parts.join("*"))?;
            wrote = true;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// Convenience: builds a polynomial from integer-coefficient terms.
pub fn poly_i64(terms: &[(u32, u32, i64)]) -> BivariatePolynomial {
    BivariatePolynomial::from_terms(
        terms
            .iter()
            .map(|&(i, j, c)| ((i, j), CyclotomicNumber::from_integer(1, c))),
    )
}
