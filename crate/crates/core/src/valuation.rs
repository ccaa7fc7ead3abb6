//! Discrete valuations on Q(zeta)(f, t): prime-polynomial valuations,
//! residues in univariate residue fields, the rank-two lexicographic
//! valuation obtained by composing the f-adic valuation with the t-adic
//! valuation on its residue field, and power-class orders in k*/(k*)^n.

use std::fmt;
use std::ops::Add;

use crate::arith::{divisors, gcd_u64, lcm_u64, rational_nth_root};
use crate::bipoly::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::ratfun::RationalFunction2;
use crate::unipoly::{FactoredUni, UniPoly, UniRatFun};

/// A value of the rank-two valuation: a pair in Z x Z ordered
/// lexicographically, added componentwise.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankTwoValue(pub i64, pub i64);

impl Add for RankTwoValue {
    type Output = RankTwoValue;
    fn add(self, rhs: RankTwoValue) -> RankTwoValue {
        RankTwoValue(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl fmt::Display for RankTwoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl fmt::Debug for RankTwoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A height-one prime of Q(zeta)[f, t] at which valuations are taken: the
/// variable t, the variable f, or a nonconstant polynomial that is monic
/// as a polynomial in f. Irreducibility of the polynomial is asserted by
/// the caller, not verified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrimeSpec {
    VarT,
    VarF,
    Poly(BivariatePolynomial),
}

impl PrimeSpec {
    /// Wrap a polynomial prime, enforcing the monic-in-f shape invariant.
    pub fn poly(p: BivariatePolynomial) -> Result<Self> {
        if p.is_constant() {
            return Err(Error::Parse("prime polynomial must be nonconstant".into()));
        }
        if !p.is_monic_in_f() {
            return Err(Error::Parse(format!(
                "prime polynomial must be monic in f: {p}"
            )));
        }
        Ok(PrimeSpec::Poly(p))
    }

    /// Parse from the certificate encoding: "t", "f", or a polynomial.
    pub fn parse(s: &str, zeta_order: u64) -> Result<Self> {
        match s.trim() {
            "t" => Ok(PrimeSpec::VarT),
            "f" => Ok(PrimeSpec::VarF),
            other => Self::poly(crate::text::parse_polynomial(other, zeta_order)?),
        }
    }

    /// The five primes used by the witness pipeline:
    /// t, f, f - t, f - t^2, f - t - t^2.
    pub fn builtin_list() -> Vec<PrimeSpec> {
        use crate::bipoly::poly_i64;
        vec![
            PrimeSpec::VarT,
            PrimeSpec::VarF,
            PrimeSpec::Poly(poly_i64(&[(1, 0, 1), (0, 1, -1)])),
            PrimeSpec::Poly(poly_i64(&[(1, 0, 1), (0, 2, -1)])),
            PrimeSpec::Poly(poly_i64(&[(1, 0, 1), (0, 1, -1), (0, 2, -1)])),
        ]
    }
}

impl fmt::Display for PrimeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSpec::VarT => write!(f, "t"),
            PrimeSpec::VarF => write!(f, "f"),
            PrimeSpec::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Largest k such that prime^k divides the nonzero polynomial.
pub fn poly_prime_valuation(p: &BivariatePolynomial, prime: &PrimeSpec) -> i64 {
    assert!(!p.is_zero(), "valuation of the zero polynomial");
    match prime {
        PrimeSpec::VarF => p.monomial_content().0 as i64,
        PrimeSpec::VarT => p.monomial_content().1 as i64,
        PrimeSpec::Poly(q) => {
            let mut count = 0i64;
            let mut cur = p.clone();
            while let Some(next) = cur.exact_divide(q) {
                count += 1;
                cur = next;
            }
            count
        }
    }
}

/// The discrete valuation of a nonzero rational function at a prime:
/// v(numerator) - v(denominator).
pub fn prime_valuation(r: &RationalFunction2, prime: &PrimeSpec) -> Result<i64> {
    if r.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    Ok(poly_prime_valuation(r.num(), prime) - poly_prime_valuation(r.den(), prime))
}

/// Reduce a polynomial with v_prime = 0 into the residue field, expressed
/// in the uniform variable x. Supported residue fields are rational
/// function fields, so polynomial primes must have degree 1 in f.
pub fn poly_residue(p: &BivariatePolynomial, prime: &PrimeSpec) -> Result<UniPoly> {
    debug_assert_eq!(poly_prime_valuation(p, prime), 0);
    match prime {
        PrimeSpec::VarT => Ok(p.at_t_zero()),
        PrimeSpec::VarF => Ok(p.at_f_zero()),
        PrimeSpec::Poly(q) => {
            // Only q = f + d(t) (monic, degree one in f) has a residue
            // field that is again a rational function field; f maps to
            // -d(t).
            if q.deg_f() != Some(1) || !q.is_monic_in_f() {
                return Err(Error::UnsupportedResiduePrime(q.to_string()));
            }
            let coeffs = q.f_coefficients();
            let g = coeffs[0].neg();
            Ok(p.substitute_f(&g))
        }
    }
}

fn strip_prime_power(p: &BivariatePolynomial, prime: &PrimeSpec, k: i64) -> BivariatePolynomial {
    if k == 0 {
        return p.clone();
    }
    match prime {
        PrimeSpec::VarF => p.shift_down(k as u32, 0),
        PrimeSpec::VarT => p.shift_down(0, k as u32),
        PrimeSpec::Poly(q) => {
            let mut cur = p.clone();
            for _ in 0..k {
                cur = cur
                    .exact_divide_trailing(q)
                    .expect("valuation counted the factor");
            }
            cur
        }
    }
}

/// The image of a unit at `prime` in the residue field: substitute t = 0
/// (for the prime t, yielding a function of f), substitute f = 0 (for the
/// prime f), or reduce modulo the prime polynomial. The residue-field
/// variable is named x uniformly.
pub fn residue(r: &RationalFunction2, prime: &PrimeSpec) -> Result<UniRatFun> {
    if r.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let kn = poly_prime_valuation(r.num(), prime);
    let kd = poly_prime_valuation(r.den(), prime);
    if kn != kd {
        return Err(Error::NotAUnitAtPrime(prime.to_string()));
    }
    let num = poly_residue(&strip_prime_power(r.num(), prime, kn), prime)?;
    let den = poly_residue(&strip_prime_power(r.den(), prime, kd), prime)?;
    UniRatFun::new(num, den)
}

fn poly_lex_valuation(p: &BivariatePolynomial) -> RankTwoValue {
    let (i, j) = p.min_monomial().expect("nonzero polynomial");
    RankTwoValue(i as i64, j as i64)
}

/// The rank-two valuation on F = Q(zeta)(f, t) with values in Z x Z
/// ordered lexicographically. For a polynomial this is the lexicographic
/// minimum over its monomial exponents; for a fraction, the difference of
/// numerator and denominator values. See `lex_valuation_composite` for the
/// equivalent two-step computation through the f-adic residue.
pub fn lex_valuation(r: &RationalFunction2) -> Result<RankTwoValue> {
    if r.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let vn = poly_lex_valuation(r.num());
    let vd = poly_lex_valuation(r.den());
    Ok(RankTwoValue(vn.0 - vd.0, vn.1 - vd.1))
}

fn poly_lex_composite(p: &BivariatePolynomial) -> RankTwoValue {
    // First component: the f-adic valuation w.
    let w = p.monomial_content().0;
    // Second component: the t-adic valuation of the image of p * f^-w in
    // the residue field of the f-adic valuation.
    let reduced = p.shift_down(w, 0).at_f_zero();
    let u = reduced
        .x_valuation()
        .expect("reduction at the f-adic valuation of p * f^-w is nonzero");
    RankTwoValue(w as i64, u as i64)
}

/// The same rank-two valuation computed as a genuine composition: the
/// f-adic valuation followed by the t-adic valuation of the reduction.
/// Must always agree with `lex_valuation`.
pub fn lex_valuation_composite(r: &RationalFunction2) -> Result<RankTwoValue> {
    if r.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let vn = poly_lex_composite(r.num());
    let vd = poly_lex_composite(r.den());
    Ok(RankTwoValue(vn.0 - vd.0, vn.1 - vd.1))
}

/// The order of the class of a nonzero residue-field element in
/// k*/(k*)^n, for k = Q(zeta)(x): n divided by the largest divisor d of n
/// such that the element is a d-th power. The element is supplied in
/// factored form; the d-th power test combines divisibility of the factor
/// exponents with a constant test.
///
/// The constant test is restricted to constants of the form
/// (rational) x (root of unity). Within that class the test is exact: a
/// d-th root of a root of unity that lies in a cyclotomic field is itself
/// a root of unity of the field (all its conjugates have absolute value
/// one), so testing inside the finite group of roots of unity present
/// decides the question, and the positive-rational part is tested by
/// integer d-th-root extraction on numerator and denominator. Constants
/// whose d-th roots exist only through larger subfields (such as sqrt(2)
/// in Q(zeta_8)) are outside the class and are rejected with an error
/// rather than guessed at.
pub fn power_class_order(r: &FactoredUni, n: u64) -> Result<u64> {
    assert!(n >= 1);
    let c = r.constant();
    if c.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    // Decompose the constant inside the field generated by it and zeta_n.
    let field_order = lcm_u64(n, c.order());
    let promoted = c.promote(field_order);
    let (rho, e, big_m) = promoted
        .rational_times_root()
        .ok_or_else(|| Error::UnsupportedConstantForPowerTest(promoted.to_string()))?;
    let mut ds = divisors(n);
    ds.reverse();
    for d in ds {
        let exps_ok = r.factors().iter().all(|(_, k)| k.rem_euclid(d as i64) == 0);
        if !exps_ok {
            continue;
        }
        // Constant: need eta in mu_M and positive rational rho' with
        // (rho' * eta)^d = rho * g^e, i.e. d*e' = e (mod M) solvable and
        // rho a d-th power in Q_{>0}.
        let root_ok = e % gcd_u64(d, big_m) == 0;
        let rational_ok = rational_nth_root(&rho, d as u32).is_some();
        if root_ok && rational_ok {
            return Ok(n / d);
        }
    }
    unreachable!("d = 1 always succeeds");
}
