//! Tame ramification of symbol-algebra classes at discrete valuations.
//!
//! At a prime p with residue characteristic zero, the class of the symbol
//! algebra (a, b)_{zeta, n} ramifies through the tame symbol
//!
//!   r = (-1)^(v(a) v(b)) * a^(v(b)) * b^(-v(a))   (mod p),
//!
//! a unit whose residue class modulo n-th powers measures the
//! ramification character; its order in k*/(k*)^n plays the role of the
//! period of the local ramification.

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::symbol::{division_value_criterion, SymbolAlgebraSpec};
use crate::unipoly::{FactoredUni, UniRatFun};
use crate::valuation::{
    poly_prime_valuation, poly_residue, power_class_order, prime_valuation, residue, PrimeSpec,
};

/// Ramification data of a symbol class at one prime.
#[derive(Clone, Debug)]
pub struct RamificationDatum {
    pub prime: PrimeSpec,
    /// The tame-symbol residue as a plain residue-field element.
    pub residue: UniRatFun,
    /// The same residue in factored form (used for the order computation).
    pub factored: FactoredUni,
    /// The modulus n of the symbol class.
    pub modulus: u64,
    /// Order of the residue class in k*/(k*)^n; divides n.
    pub order: u64,
}

impl RamificationDatum {
    pub fn is_unramified(&self) -> bool {
        self.order == 1
    }
}

/// Compute the tame symbol of the class of (a, b)_{zeta, n} at a prime.
/// The residue is computed twice, once directly and once in factored
/// form assembled from the residues of the four constituent polynomials;
/// the two must agree (the formula always yields a unit at p).
pub fn tame_symbol(spec: &SymbolAlgebraSpec, prime: &PrimeSpec) -> Result<RamificationDatum> {
    let va = prime_valuation(spec.a(), prime)?;
    let vb = prime_valuation(spec.b(), prime)?;
    let sign: i64 = if (va * vb).rem_euclid(2) == 1 { -1 } else { 1 };

    // Direct route: form r and reduce it.
    let r = spec
        .a()
        .pow(vb)?
        .mul(&spec.b().pow(-va)?)
        .scale(&CyclotomicNumber::from_integer(1, sign));
    if prime_valuation(&r, prime)? != 0 {
        return Err(Error::TameSymbolUndefined(format!(
            "tame symbol is not a unit at {prime}"
        )));
    }
    let plain = residue(&r, prime)?;

    // Factored route: r is a signed product of the four polynomials
    // num(a), den(a), num(b), den(b); strip the prime power from each and
    // reduce the unit parts (the stripped powers cancel since v_p(r) = 0).
    let mut factored = FactoredUni::one();
    factored.mul_constant(&CyclotomicNumber::from_integer(1, sign))?;
    let parts: [(&crate::bipoly::BivariatePolynomial, i64); 4] = [
        (spec.a().num(), vb),
        (spec.a().den(), -vb),
        (spec.b().num(), -va),
        (spec.b().den(), va),
    ];
    let mut total_stripped = 0i64;
    for (poly, e) in parts {
        if e == 0 {
            continue;
        }
        let k = poly_prime_valuation(poly, prime);
        total_stripped += k * e;
        let unit_part = strip_prime(poly, prime, k);
        let reduced = poly_residue(&unit_part, prime)?;
        factored.mul_poly_power(&reduced, e)?;
    }
    if total_stripped != 0 {
        return Err(Error::TameSymbolUndefined(
            "stripped prime powers do not cancel".into(),
        ));
    }
    if factored.expand() != plain {
        return Err(Error::TameSymbolUndefined(
            "factored and direct residues disagree".into(),
        ));
    }
    let order = power_class_order(&factored, spec.n())?;
    Ok(RamificationDatum {
        prime: prime.clone(),
        residue: plain,
        factored,
        modulus: spec.n(),
        order,
    })
}

fn strip_prime(
    poly: &crate::bipoly::BivariatePolynomial,
    prime: &PrimeSpec,
    k: i64,
) -> crate::bipoly::BivariatePolynomial {
    let mut cur = poly.clone();
    match prime {
        PrimeSpec::VarF => cur = cur.shift_down(k as u32, 0),
        PrimeSpec::VarT => cur = cur.shift_down(0, k as u32),
        PrimeSpec::Poly(q) => {
            for _ in 0..k {
                cur = cur
                    .exact_divide_trailing(q)
                    .expect("valuation counted the factor");
            }
        }
    }
    cur
}

/// Ramification of a spec over a list of primes, plus the
/// determined-by-ramification verdict.
#[derive(Debug)]
pub struct RamificationSweep {
    pub data: Vec<RamificationDatum>,
    pub determined: bool,
    /// First prime in list order whose ramification order equals n.
    pub witness: Option<PrimeSpec>,
}

/// The class is determined by ramification over the list when some prime
/// carries ramification of full order n. Requires the division criterion
/// to be certified first: only then is the class period known to be n.
pub fn determined_by_ramification(
    spec: &SymbolAlgebraSpec,
    primes: &[PrimeSpec],
) -> Result<RamificationSweep> {
    if !division_value_criterion(spec)?.is_division {
        return Err(Error::UncertifiedSpec);
    }
    let mut data = Vec::with_capacity(primes.len());
    let mut witness = None;
    for p in primes {
        let datum = tame_symbol(spec, p)?;
        if witness.is_none() && datum.order == spec.n() {
            witness = Some(p.clone());
        }
        data.push(datum);
    }
    Ok(RamificationSweep {
        determined: witness.is_some(),
        witness,
        data,
    })
}

/// True when the class is unramified (order one) at every listed prime.
pub fn unramified_on_list(spec: &SymbolAlgebraSpec, primes: &[PrimeSpec]) -> Result<bool> {
    for p in primes {
        if tame_symbol(spec, p)?.order != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::poly_i64;
    use crate::ratfun::RationalFunction2;

    #[test]
    fn witness_spec_tame_symbols() {
        let spec = SymbolAlgebraSpec::witness_spec(6);
        // At t: both valuations vanish, r = 1, unramified.
        let at_t = tame_symbol(&spec, &PrimeSpec::VarT).unwrap();
        assert_eq!(at_t.order, 1);
        assert!(at_t.residue.is_one());
        // At f: v(a) = 1, v(b) = 0, r = b^-1, residue (1+x)/x of order n.
        let at_f = tame_symbol(&spec, &PrimeSpec::VarF).unwrap();
        assert_eq!(at_f.residue.to_string(), "(1 + x)/x");
        assert_eq!(at_f.order, 6);
    }

    #[test]
    fn simple_symbol_at_f() {
        // a = f, b = t: r = b^-1 mod f = 1/x, order n.
        let spec = SymbolAlgebraSpec::with_canonical_root(
            5,
            RationalFunction2::from_poly(poly_i64(&[(1, 0, 1)])),
            RationalFunction2::from_poly(poly_i64(&[(0, 1, 1)])),
        )
        .unwrap();
        let datum = tame_symbol(&spec, &PrimeSpec::VarF).unwrap();
        assert_eq!(datum.residue.to_string(), "1/x");
        assert_eq!(datum.order, 5);
    }

    #[test]
    fn determined_by_ramification_on_builtins() {
        let spec = SymbolAlgebraSpec::witness_spec(4);
        let sweep = determined_by_ramification(&spec, &PrimeSpec::builtin_list()).unwrap();
        assert!(sweep.determined);
        assert_eq!(sweep.witness, Some(PrimeSpec::VarF));
        // Only the branch prime t is unramified.
        assert_eq!(sweep.data[0].order, 1);
        for datum in &sweep.data[1..] {
            assert_eq!(datum.order, 4, "full ramification at {}", datum.prime);
        }
        // Over {t} alone nothing is determined.
        let sweep = determined_by_ramification(&spec, &[PrimeSpec::VarT]).unwrap();
        assert!(!sweep.determined);
        // a = f, b = t is determined already over {f}.
        let simple = SymbolAlgebraSpec::with_canonical_root(
            5,
            RationalFunction2::from_poly(poly_i64(&[(1, 0, 1)])),
            RationalFunction2::from_poly(poly_i64(&[(0, 1, 1)])),
        )
        .unwrap();
        let sweep = determined_by_ramification(&simple, &[PrimeSpec::VarF]).unwrap();
        assert!(sweep.determined);
        assert_eq!(sweep.witness, Some(PrimeSpec::VarF));
    }

    #[test]
    fn uncertified_spec_is_refused() {
        let f = RationalFunction2::from_poly(poly_i64(&[(1, 0, 1)]));
        let spec = SymbolAlgebraSpec::with_canonical_root(2, f.clone(), f).unwrap();
        assert_eq!(
            determined_by_ramification(&spec, &PrimeSpec::builtin_list()).unwrap_err(),
            Error::UncertifiedSpec
        );
    }

    #[test]
    fn unramified_lists() {
        let split = SymbolAlgebraSpec::with_canonical_root(
            3,
            RationalFunction2::from_integer(1),
            RationalFunction2::from_integer(1),
        )
        .unwrap();
        assert!(unramified_on_list(&split, &PrimeSpec::builtin_list()).unwrap());
        let spec = SymbolAlgebraSpec::witness_spec(3);
        assert!(unramified_on_list(&spec, &[PrimeSpec::VarT]).unwrap());
        assert!(!unramified_on_list(&spec, &[PrimeSpec::VarF]).unwrap());
    }

    #[test]
    fn bimultiplicativity_on_factored_samples() {
        // tame(a a', b) should equal tame(a, b) * tame(a', b) (mod n-th
        // powers); here they even agree exactly up to sign bookkeeping,
        // so compare through power_class_order of the quotient.
        let n = 6u64;
        let f = RationalFunction2::from_poly(poly_i64(&[(1, 0, 1)]));
        let t = RationalFunction2::from_poly(poly_i64(&[(0, 1, 1)]));
        let fmt = RationalFunction2::from_poly(poly_i64(&[(1, 0, 1), (0, 1, -1)]));
        let samples = [
            (f.clone(), fmt.clone(), t.clone()),
            (fmt.clone(), f.clone(), t.clone()),
            (f.clone(), t.clone(), fmt.clone()),
        ];
        for (a, a2, b) in samples {
            let prime = PrimeSpec::VarF;
            let s1 = SymbolAlgebraSpec::with_canonical_root(n, a.clone(), b.clone()).unwrap();
            let s2 = SymbolAlgebraSpec::with_canonical_root(n, a2.clone(), b.clone()).unwrap();
            let s12 = SymbolAlgebraSpec::with_canonical_root(n, a.mul(&a2), b.clone()).unwrap();
            let r1 = tame_symbol(&s1, &prime).unwrap();
            let r2 = tame_symbol(&s2, &prime).unwrap();
            let r12 = tame_symbol(&s12, &prime).unwrap();
            // quotient = r12 / (r1 r2) must be an n-th power class.
            let mut quotient = r12.factored.clone();
            quotient.mul_factored(&r1.factored.pow(-1));
            quotient.mul_factored(&r2.factored.pow(-1));
            assert_eq!(power_class_order(&quotient, n).unwrap(), 1);
        }
    }

    #[test]
    fn antisymmetry_on_samples() {
        let n = 4u64;
        let f = RationalFunction2::from_poly(poly_i64(&[(1, 0, 1)]));
        let t = RationalFunction2::from_poly(poly_i64(&[(0, 1, 1)]));
        for prime in [PrimeSpec::VarF, PrimeSpec::VarT] {
            let s = SymbolAlgebraSpec::with_canonical_root(n, f.clone(), t.clone()).unwrap();
            let sw = SymbolAlgebraSpec::with_canonical_root(n, t.clone(), f.clone()).unwrap();
            let r = tame_symbol(&s, &prime).unwrap();
            let rw = tame_symbol(&sw, &prime).unwrap();
            assert_eq!(r.order, rw.order);
            // The product of the two residues is an n-th power class.
            let mut product = r.factored.clone();
            product.mul_factored(&rw.factored);
            assert_eq!(power_class_order(&product, n).unwrap(), 1);
        }
    }
}
