//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! A `CyclotomicNumber` of order `m` is a residue class in
//! Q[x]/(Phi_m(x)), stored as a coefficient vector of length phi(m).
//! Mixed-order arithmetic promotes both operands into the field of
//! order lcm(m1, m2) via zeta_m -> zeta_M^(M/m).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{euler_phi, lcm_u64};
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over the rationals (internal helpers).
// Coefficients ascending; the zero polynomial is the empty vector.
// ---------------------------------------------------------------------------

fn rp_trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rp_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    rp_trim(&mut out);
    out
}

fn rp_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    rp_trim(&mut out);
    out
}

/// Division with remainder by a nonzero divisor.
fn rp_divrem(a: &[BigRational], d: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!d.is_empty(), "division by zero polynomial");
    let mut rem: Vec<BigRational> = a.to_vec();
    if rem.len() < d.len() {
        return (Vec::new(), rem);
    }
    let lead = d.last().unwrap().clone();
    let mut quo = vec![BigRational::zero(); rem.len() - d.len() + 1];
    while rem.len() >= d.len() && !rem.is_empty() {
        let shift = rem.len() - d.len();
        let c = rem.last().unwrap() / &lead;
        quo[shift] = c.clone();
        for (i, dc) in d.iter().enumerate() {
            let t = dc * &c;
            rem[shift + i] -= t;
        }
        rp_trim(&mut rem);
    }
    rp_trim(&mut quo);
    (quo, rem)
}

/// Extended gcd: returns (g, s) with s*a = g (mod b) and g the monic gcd.
fn rp_half_xgcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = rp_divrem(&r0, &r1);
        let s = rp_add(&s0, &rp_mul(&q, &s1).iter().map(|c| -c).collect::<Vec<_>>());
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

fn cyclo_cache() -> &'static Mutex<HashMap<u64, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, as integer coefficients in ascending
/// degree order. Computed by exact division of x^m - 1 by the product of
/// the cyclotomic polynomials of the proper divisors of m.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let result = if m == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^m - 1
        let mut num = vec![BigInt::zero(); (m + 1) as usize];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::from(1);
        let mut den = vec![BigInt::one()];
        for d in crate::arith::divisors(m) {
            if d < m {
                den = zp_mul(&den, &cyclotomic_polynomial(d));
            }
        }
        zp_exact_div(&num, &den)
    };
    cyclo_cache().lock().unwrap().insert(m, result.clone());
    result
}

fn zp_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// Exact division of integer polynomials by a divisor with unit leading
/// coefficient; panics when the division is not exact (never the case in
/// the cyclotomic recursion).
fn zp_exact_div(a: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    let dl = d.last().expect("nonzero divisor");
    assert!(
        dl.abs().is_one(),
        "divisor must have unit leading coefficient"
    );
    let mut quo = vec![BigInt::zero(); rem.len().saturating_sub(d.len()) + 1];
    while rem.len() >= d.len() {
        let shift = rem.len() - d.len();
        let c = rem.last().unwrap() / dl;
        quo[shift] = c.clone();
        for (i, dc) in d.iter().enumerate() {
            let t = dc * &c;
            rem[shift + i] -= t;
        }
        while rem.last().is_some_and(|x| x.is_zero()) {
            rem.pop();
        }
    }
    assert!(rem.is_empty(), "inexact division in cyclotomic recursion");
    quo
}

fn cyclotomic_rational(m: u64) -> Vec<BigRational> {
    cyclotomic_polynomial(m)
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

// ---------------------------------------------------------------------------
// CyclotomicNumber
// ---------------------------------------------------------------------------

/// An element of the m-th cyclotomic field in reduced coordinates.
#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u64,
    /// Coefficients of 1, zeta, ..., zeta^(phi(m)-1); always length phi(m).
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    fn reduced(order: u64, mut rep: Vec<BigRational>) -> Self {
        let phi = euler_phi(order) as usize;
        if rep.len() > phi {
            let modulus = cyclotomic_rational(order);
            let (_, r) = rp_divrem(&rep, &modulus);
            rep = r;
        }
        rep.resize(phi, BigRational::zero());
        CyclotomicNumber { order, coeffs: rep }
    }

    pub fn zero(order: u64) -> Self {
        Self::reduced(order, Vec::new())
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u64, q: BigRational) -> Self {
        Self::reduced(order, vec![q])
    }

    pub fn from_integer(order: u64, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(n)))
    }

    /// The distinguished primitive m-th root of unity zeta_m (the class
    /// of x). For m = 1 this is 1, for m = 2 it is -1.
    pub fn root_of_unity(order: u64) -> Self {
        Self::reduced(order, vec![BigRational::zero(), BigRational::one()])
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value when this element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(
                self.coeffs
                    .first()
                    .cloned()
                    .unwrap_or_else(BigRational::zero),
            )
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// Embed into the field of order `new_order`; requires order | new_order.
    pub fn promote(&self, new_order: u64) -> Self {
        assert!(
            new_order.is_multiple_of(self.order),
            "promotion target must be a multiple of the current order"
        );
        if new_order == self.order {
            return self.clone();
        }
        let step = Self::reduced(new_order, {
            let mut v = vec![BigRational::zero(); (new_order / self.order + 1) as usize];
            v[(new_order / self.order) as usize] = BigRational::one();
            v
        });
        // Horner evaluation of the coefficient polynomial at zeta_M^(M/m).
        let mut acc = Self::zero(new_order);
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(&step)
                .add(&Self::from_rational(new_order, c.clone()));
        }
        acc
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = lcm_u64(a.order, b.order);
        (a.promote(m), b.promote(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        Self::reduced(a.order, rp_add(&a.coeffs, &b.coeffs))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        Self::reduced(a.order, rp_mul(&a.coeffs, &b.coeffs))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended gcd of the representative
    /// with the cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rep = self.coeffs.clone();
        rp_trim(&mut rep);
        let modulus = cyclotomic_rational(self.order);
        let (g, s) = rp_half_xgcd(&rep, &modulus);
        // Phi_m is irreducible over Q, so the gcd is a nonzero constant.
        assert_eq!(
            g.len(),
            1,
            "cyclotomic modulus must be coprime to nonzero element"
        );
        let ginv = BigRational::one() / &g[0];
        Ok(Self::reduced(
            self.order,
            s.iter().map(|c| c * &ginv).collect(),
        ))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Decompose as (positive rational) * (element of the finite group of
    /// roots of unity), when possible. Returns (rho, e, big_m) such that
    /// self = rho * g^e where g generates the group of roots of unity of
    /// the field (g = zeta for even order, -zeta for odd order) and
    /// big_m = lcm(2, order) is its cardinality.
    pub fn rational_times_root(&self) -> Option<(BigRational, u64, u64)> {
        if self.is_zero() {
            return None;
        }
        let m = self.order;
        let big_m = lcm_u64(2, m);
        let zeta = Self::root_of_unity(m);
        let g = if m.is_multiple_of(2) {
            zeta
        } else {
            zeta.neg()
        };
        let g_inv = g.inv().expect("root of unity is invertible");
        let mut p = Self::one(m);
        for e in 0..big_m {
            if let Some(q) = self.mul(&p).as_rational() {
                if q.is_positive() {
                    return Some((q, e, big_m));
                }
            }
            p = p.mul(&g_inv);
        }
        None
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc(m={}; {})", self.order, self)
    }
}

impl fmt::Display for CyclotomicNumber {
    /// Ascending powers of `z`, e.g. `1 - z + 2*z^2`; rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let unit_mag = mag.is_one();
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !unit_mag {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn coeffs_i64(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn cyclotomic_base_cases() {
        assert_eq!(coeffs_i64(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(coeffs_i64(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(coeffs_i64(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
    }

    #[test]
    fn cyclotomic_degree_and_product() {
        for m in 1..=24u64 {
            let phi = euler_phi(m) as usize;
            assert_eq!(cyclotomic_polynomial(m).len(), phi + 1, "degree of Phi_{m}");
            // Product over divisors equals x^m - 1.
            let mut prod = vec![BigInt::one()];
            for d in crate::arith::divisors(m) {
                prod = zp_mul(&prod, &cyclotomic_polynomial(d));
            }
            let mut expect = vec![BigInt::zero(); (m + 1) as usize];
            expect[0] = BigInt::from(-1);
            expect[m as usize] = BigInt::one();
            assert_eq!(prod, expect, "divisor product for m = {m}");
        }
    }

    #[test]
    fn zeta_powers() {
        let z4 = CyclotomicNumber::root_of_unity(4);
        assert_eq!(z4.pow(2).unwrap(), CyclotomicNumber::from_integer(4, -1));
        let z6 = CyclotomicNumber::root_of_unity(6);
        let expect = z6.sub(&CyclotomicNumber::one(6));
        assert_eq!(z6.pow(2).unwrap(), expect, "zeta_6^2 = zeta_6 - 1");
    }

    #[test]
    fn inversion() {
        let z4 = CyclotomicNumber::root_of_unity(4);
        assert_eq!(z4.inv().unwrap(), z4.neg());
        assert_eq!(
            CyclotomicNumber::zero(4).inv().unwrap_err(),
            Error::DivisionByZero
        );
        let x = CyclotomicNumber::root_of_unity(12).add(&CyclotomicNumber::from_integer(12, 3));
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn promotion_is_an_embedding() {
        let z3 = CyclotomicNumber::root_of_unity(3);
        let z12 = CyclotomicNumber::root_of_unity(12);
        assert_eq!(z3.promote(12), z12.pow(4).unwrap());
        // Mixed-order arithmetic through lcm.
        let z4 = CyclotomicNumber::root_of_unity(4);
        let prod = z3.mul(&z4);
        assert_eq!(prod.order(), 12);
        assert!(prod.pow(12).unwrap().is_one());
        assert!(!prod.pow(6).unwrap().is_one());
    }

    #[test]
    fn rational_root_decomposition() {
        // -3/2 * zeta_4 = (3/2) * g^e for g = zeta_4 (even order).
        let z4 = CyclotomicNumber::root_of_unity(4);
        let x = z4.scale(&(-rat(3) / rat(2)));
        let (rho, e, m) = x.rational_times_root().unwrap();
        assert_eq!(rho, rat(3) / rat(2));
        assert_eq!(m, 4);
        let g = CyclotomicNumber::root_of_unity(4);
        assert_eq!(g.pow(e as i64).unwrap().scale(&rho), x);

        // 1 + zeta_4 is sqrt(2) * zeta_8: not rational * root of unity in Q(i).
        let y = z4.add(&CyclotomicNumber::one(4));
        assert!(y.rational_times_root().is_none());

        // Odd order uses -zeta as generator.
        let z3 = CyclotomicNumber::root_of_unity(3);
        let (rho, e, m) = z3.neg().rational_times_root().unwrap();
        assert_eq!(rho, rat(1));
        assert_eq!(m, 6);
        let g = CyclotomicNumber::root_of_unity(3).neg();
        assert_eq!(g.pow(e as i64).unwrap(), z3.neg());
    }
}
