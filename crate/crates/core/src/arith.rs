//! Small number-theoretic helpers on machine integers and exact rationals.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Greatest common divisor on `u64`, with `gcd(0, 0) = 0`.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least common multiple on `u64`. Panics on overflow.
pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u64(a, b) * b
}

/// Trial-division factorization, smallest prime first.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, k) in factorize(n) {
        let prev = out.clone();
        let mut pe = 1u64;
        for _ in 0..k {
            pe *= p;
            out.extend(prev.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}

/// Primality by trial division (the scales here are tiny).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factorize(n) {
        out = out / p * (p - 1);
    }
    out
}

/// `base^exp mod m` for `m >= 1`.
pub fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u128;
    let mut b = (base % m) as u128;
    let mut e = exp;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    result as u64
}

/// Exact integer `d`-th root test: returns the root when `x = r^d` for a
/// non-negative integer `r`.
fn exact_nth_root(x: &BigInt, d: u32) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.nth_root(d);
    if num_traits::pow::Pow::pow(&r, d) == *x {
        Some(r)
    } else {
        None
    }
}

/// Exact `d`-th root of a positive rational, if one exists in the rationals.
pub fn rational_nth_root(q: &BigRational, d: u32) -> Option<BigRational> {
    if q.is_zero() || q.is_negative() {
        return None;
    }
    let n = exact_nth_root(q.numer(), d)?;
    let den = exact_nth_root(q.denom(), d)?;
    Some(BigRational::new(n, den))
}

/// Parse helper: rational from integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// True when the rational is a positive number.
pub fn is_positive_rational(q: &BigRational) -> bool {
    q.numer().sign() == Sign::Plus
}

/// gcd on `i64` absolute values (used for value-vector determinants).
pub fn gcd_i64(a: i64, b: i64) -> u64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs())
}

/// One, as a rational.
pub fn rat_one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_divisors() {
        assert_eq!(factorize(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rational_nth_root(&rat(8), 3), Some(rat(2)));
        assert_eq!(rational_nth_root(&rat(8), 2), None);
        let q = BigRational::new(BigInt::from(4), BigInt::from(9));
        assert_eq!(
            rational_nth_root(&q, 2),
            Some(BigRational::new(BigInt::from(2), BigInt::from(3)))
        );
    }

    #[test]
    fn pow_mod_small() {
        assert_eq!(pow_mod(2, 10, 1000), 24);
        assert_eq!(pow_mod(3, 4, 5), 1);
        assert_eq!(pow_mod(7, 0, 13), 1);
    }
}
