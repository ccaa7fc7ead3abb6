//! Symbol algebras (a, b)_{zeta, n} over F = Q(zeta)(f, t).
//!
//! The algebra of degree n is generated by Y and Z with
//!
//!   Y^n = a,   Z^n = b,   Y Z = zeta Z Y,
//!
//! and elements are stored on the basis Y^i Z^j with exponents reduced
//! into [0, n). Moving Z^j across Y^k therefore costs zeta^(-jk), and an
//! exponent overflow past n contributes one factor of a (for Y) or b
//! (for Z).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::gcd_i64;
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::linalg::{solve_square, LinearSolution};
use crate::ratfun::RationalFunction2;
use crate::valuation::{lex_valuation, RankTwoValue};

/// The data (n, zeta, a, b) defining a symbol algebra.
#[derive(Debug)]
pub struct SymbolAlgebraSpec {
    n: u64,
    zeta: CyclotomicNumber,
    a: RationalFunction2,
    b: RationalFunction2,
    /// zeta^0 .. zeta^(n-1), so products need no repeated powering.
    zeta_powers: Vec<CyclotomicNumber>,
}

impl SymbolAlgebraSpec {
    /// Validates that zeta is a primitive n-th root of unity and a, b are
    /// nonzero.
    pub fn new(
        n: u64,
        zeta: CyclotomicNumber,
        a: RationalFunction2,
        b: RationalFunction2,
    ) -> Result<Arc<Self>> {
        if n < 1 {
            return Err(Error::InvalidInput("degree parameter must be >= 1".into()));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidInput("a and b must be nonzero".into()));
        }
        let mut zeta_powers = Vec::with_capacity(n as usize);
        let mut p = CyclotomicNumber::one(zeta.order());
        for k in 0..n {
            if k > 0 && p.is_one() {
                return Err(Error::InvalidInput(format!(
                    "zeta has order {k}, not primitive of order {n}"
                )));
            }
            zeta_powers.push(p.clone());
            p = p.mul(&zeta);
        }
        if !p.is_one() {
            return Err(Error::InvalidInput(format!("zeta^{n} is not 1")));
        }
        Ok(Arc::new(SymbolAlgebraSpec {
            n,
            zeta,
            a,
            b,
            zeta_powers,
        }))
    }

    /// Use the distinguished primitive n-th root of unity.
    pub fn with_canonical_root(
        n: u64,
        a: RationalFunction2,
        b: RationalFunction2,
    ) -> Result<Arc<Self>> {
        Self::new(n, CyclotomicNumber::root_of_unity(n), a, b)
    }

    /// The algebra of Y^n = f/(f-t), Z^n = (f-t^2)/(f-t-t^2) with the
    /// canonical root of unity.
    pub fn witness_spec(n: u64) -> Arc<Self> {
        use crate::bipoly::poly_i64;
        let a = RationalFunction2::new(poly_i64(&[(1, 0, 1)]), poly_i64(&[(1, 0, 1), (0, 1, -1)]))
            .expect("nonzero denominator");
        let b = RationalFunction2::new(
            poly_i64(&[(1, 0, 1), (0, 2, -1)]),
            poly_i64(&[(1, 0, 1), (0, 1, -1), (0, 2, -1)]),
        )
        .expect("nonzero denominator");
        Self::with_canonical_root(n, a, b).expect("canonical spec is valid")
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn zeta(&self) -> &CyclotomicNumber {
        &self.zeta
    }

    pub fn a(&self) -> &RationalFunction2 {
        &self.a
    }

    pub fn b(&self) -> &RationalFunction2 {
        &self.b
    }

    /// zeta^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> &CyclotomicNumber {
        &self.zeta_powers[k.rem_euclid(self.n as i64) as usize]
    }

    fn same_as(&self, other: &Self) -> bool {
        self.n == other.n && self.zeta == other.zeta && self.a == other.a && self.b == other.b
    }
}

/// An element of a symbol algebra on the basis Y^i Z^j, 0 <= i, j < n.
#[derive(Clone)]
pub struct SymbolElement {
    spec: Arc<SymbolAlgebraSpec>,
    coeffs: BTreeMap<(u32, u32), RationalFunction2>,
}

impl SymbolElement {
    pub fn zero(spec: &Arc<SymbolAlgebraSpec>) -> Self {
        SymbolElement {
            spec: Arc::clone(spec),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(spec: &Arc<SymbolAlgebraSpec>, value: RationalFunction2) -> Self {
        Self::term(spec, 0, 0, value)
    }

    pub fn one(spec: &Arc<SymbolAlgebraSpec>) -> Self {
        Self::scalar(spec, RationalFunction2::one())
    }

    /// The basis element Y^i Z^j (exponents already in range).
    pub fn basis(spec: &Arc<SymbolAlgebraSpec>, i: u32, j: u32) -> Self {
        Self::term(spec, i, j, RationalFunction2::one())
    }

    pub fn term(spec: &Arc<SymbolAlgebraSpec>, i: u32, j: u32, value: RationalFunction2) -> Self {
        assert!(
            (i as u64) < spec.n && (j as u64) < spec.n,
            "exponents out of range"
        );
        let mut coeffs = BTreeMap::new();
        if !value.is_zero() {
            coeffs.insert((i, j), value);
        }
        SymbolElement {
            spec: Arc::clone(spec),
            coeffs,
        }
    }

    pub fn gen_y(spec: &Arc<SymbolAlgebraSpec>) -> Self {
        if spec.n == 1 {
            // Y^1 = a already.
            Self::scalar(spec, spec.a.clone())
        } else {
            Self::basis(spec, 1, 0)
        }
    }

    pub fn gen_z(spec: &Arc<SymbolAlgebraSpec>) -> Self {
        if spec.n == 1 {
            Self::scalar(spec, spec.b.clone())
        } else {
            Self::basis(spec, 0, 1)
        }
    }

    pub fn spec(&self) -> &Arc<SymbolAlgebraSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), RationalFunction2> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec.same_as(&other.spec) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn add_term(&mut self, key: (u32, u32), value: RationalFunction2) {
        if value.is_zero() {
            return;
        }
        match self.coeffs.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&value);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(*k, v.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        SymbolElement {
            spec: Arc::clone(&self.spec),
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &RationalFunction2) -> Self {
        if r.is_zero() {
            return Self::zero(&self.spec);
        }
        SymbolElement {
            spec: Arc::clone(&self.spec),
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v.mul(r))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(&self.spec);
        for _ in 0..e {
            acc = sym_mul(&acc, self)?;
        }
        Ok(acc)
    }
}

impl PartialEq for SymbolElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.spec, &other.spec) || self.spec.same_as(&other.spec))
            && self.coeffs == other.coeffs
    }
}

impl Eq for SymbolElement {}

impl fmt::Display for SymbolElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = vec![format!("({c})")];
            match i {
                0 => {}
                1 => parts.push("Y".into()),
                _ => parts.push(format!("Y^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("Z".into()),
                _ => parts.push(format!("Z^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymbolElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sym({self})")
    }
}

/// Product in the symbol algebra: bilinear extension of
///
///   (Y^i Z^j)(Y^k Z^l) = zeta^(-jk) Y^(i+k) Z^(j+l),
///
/// with exponent overflow i+k >= n contributing a factor a (and j+l >= n
/// a factor b) before reduction mod n. This convention makes YZ = zeta ZY
/// hold on the nose.
pub fn sym_mul(x: &SymbolElement, y: &SymbolElement) -> Result<SymbolElement> {
    x.check_compatible(y)?;
    let spec = &x.spec;
    let n = spec.n as u32;
    let mut out = SymbolElement::zero(spec);
    for (&(i, j), cx) in &x.coeffs {
        for (&(k, l), cy) in &y.coeffs {
            let twist = spec.zeta_pow(-((j as i64) * (k as i64)));
            let mut coeff = cx.mul(cy).scale(twist);
            let (mut iy, mut jz) = (i + k, j + l);
            if iy >= n {
                coeff = coeff.mul(&spec.a);
                iy -= n;
            }
            if jz >= n {
                coeff = coeff.mul(&spec.b);
                jz -= n;
            }
            out.add_term((iy, jz), coeff);
        }
    }
    Ok(out)
}

/// Result of the value-group division criterion.
#[derive(Clone, Debug)]
pub struct DivisionCriterion {
    pub value_a: RankTwoValue,
    pub value_b: RankTwoValue,
    pub det: i64,
    /// Order of the subgroup of (Z/n)^2 generated by the two value images.
    pub subgroup_order: u64,
    pub is_division: bool,
}

/// Order of the subgroup of (Z/n)^2 generated by two vectors.
pub fn value_subgroup_order(v1: (i64, i64), v2: (i64, i64), n: u64) -> u64 {
    let n_i = n as i64;
    let reduce = |v: (i64, i64)| (v.0.rem_euclid(n_i), v.1.rem_euclid(n_i));
    let v1 = reduce(v1);
    let v2 = reduce(v2);
    let mut set = std::collections::HashSet::new();
    for s in 0..n_i {
        for t in 0..n_i {
            set.insert((
                (s * v1.0 + t * v2.0).rem_euclid(n_i),
                (s * v1.1 + t * v2.1).rem_euclid(n_i),
            ));
        }
    }
    set.len() as u64
}

/// The division test of the value-group criterion: the algebra is a
/// division algebra when the images of v(a), v(b) under the rank-two
/// valuation generate (Z/n)^2, equivalently when det of the value matrix
/// is a unit mod n. Both formulations are computed and must agree.
pub fn division_value_criterion(spec: &SymbolAlgebraSpec) -> Result<DivisionCriterion> {
    let va = lex_valuation(spec.a())?;
    let vb = lex_valuation(spec.b())?;
    let det = va.0 * vb.1 - va.1 * vb.0;
    let by_det = gcd_i64(det, spec.n() as i64) == 1;
    let subgroup_order = value_subgroup_order((va.0, va.1), (vb.0, vb.1), spec.n());
    let by_enumeration = subgroup_order == spec.n() * spec.n();
    if by_det != by_enumeration {
        return Err(Error::InternalCheckFailed(format!(
            "division criterion routes disagree: det test {by_det}, enumeration {by_enumeration}"
        )));
    }
    Ok(DivisionCriterion {
        value_a: va,
        value_b: vb,
        det,
        subgroup_order,
        is_division: by_det,
    })
}

/// Report of the maximal-subfield checks for y = Y^q', z = Z^q.
#[derive(Clone, Debug)]
pub struct MaximalSubfieldReport {
    pub commute: bool,
    pub y_power_is_a: bool,
    pub z_power_is_b: bool,
    /// Dimension over F of the commutative subalgebra generated by y, z.
    pub dimension: u64,
    pub ok: bool,
}

/// Verify that y := Y^q' and z := Z^q commute, that y^q = a and
/// z^q' = b, and that the y^i z^j span a commutative subalgebra of
/// dimension q*q' = n (a maximal subfield candidate).
pub fn maximal_subfield_check(
    spec: &Arc<SymbolAlgebraSpec>,
    q: u64,
    q_prime: u64,
) -> Result<MaximalSubfieldReport> {
    let n = spec.n();
    if q.checked_mul(q_prime) != Some(n) {
        return Err(Error::InvalidInput(format!(
            "need q * q' = n (got {q} * {q_prime} != {n})"
        )));
    }
    let y = if q_prime.is_multiple_of(n) {
        // q' = n only when q = 1; Y^n is the scalar a.
        SymbolElement::scalar(spec, spec.a().clone())
    } else {
        SymbolElement::basis(spec, (q_prime % n) as u32, 0)
    };
    let z = if q.is_multiple_of(n) {
        SymbolElement::scalar(spec, spec.b().clone())
    } else {
        SymbolElement::basis(spec, 0, (q % n) as u32)
    };
    let commute = sym_mul(&y, &z)? == sym_mul(&z, &y)?;
    let y_power_is_a = y.pow(q as u32)? == SymbolElement::scalar(spec, spec.a().clone());
    let z_power_is_b = z.pow(q_prime as u32)? == SymbolElement::scalar(spec, spec.b().clone());

    // Linear independence of the y^i z^j over F: every product is a
    // nonzero multiple of a distinct basis monomial.
    let mut seen = std::collections::HashSet::new();
    let mut independent = true;
    for i in 0..q {
        for j in 0..q_prime {
            let prod = sym_mul(&y.pow(i as u32)?, &z.pow(j as u32)?)?;
            if prod.coeffs.len() != 1 {
                independent = false;
                continue;
            }
            let (&key, coeff) = prod.coeffs.iter().next().unwrap();
            if coeff.is_zero() || !seen.insert(key) {
                independent = false;
            }
        }
    }
    let dimension = seen.len() as u64;
    let ok = commute && y_power_is_a && z_power_is_b && independent && dimension == n;
    Ok(MaximalSubfieldReport {
        commute,
        y_power_is_a,
        z_power_is_b,
        dimension,
        ok,
    })
}

/// Outcome of inverting an element: an inverse, or a certified zero
/// divisor annihilating it when the algebra is not division at x.
#[derive(Debug)]
pub enum SymInverse {
    Inverse(SymbolElement),
    ZeroDivisor(SymbolElement),
}

/// Invert x by solving the n^2 x n^2 linear system x * u = 1 over F with
/// exact fraction-free elimination. When the multiplication operator is
/// singular, a nonzero kernel element (a zero divisor) is returned
/// instead.
pub fn sym_inverse(x: &SymbolElement) -> Result<SymInverse> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let spec = &x.spec;
    // gcd-free exact elimination on the n^2-dimensional operator is only
    // kept tractable up to this bound.
    if spec.n > 12 {
        return Err(Error::InvalidInput(format!(
            "inversion is capped at degree 12 (spec has n = {})",
            spec.n
        )));
    }
    let n = spec.n as usize;
    let dim = n * n;
    let idx = |i: u32, j: u32| (i as usize) * n + j as usize;
    let mut matrix = vec![vec![RationalFunction2::zero(); dim]; dim];
    for (&(i, j), c) in &x.coeffs {
        for k in 0..n as u32 {
            for l in 0..n as u32 {
                let twist = spec.zeta_pow(-((j as i64) * (k as i64)));
                let mut coeff = c.scale(twist);
                let (mut iy, mut jz) = (i + k, j + l);
                if iy >= n as u32 {
                    coeff = coeff.mul(&spec.a);
                    iy -= n as u32;
                }
                if jz >= n as u32 {
                    coeff = coeff.mul(&spec.b);
                    jz -= n as u32;
                }
                let row = idx(iy, jz);
                let col = idx(k, l);
                matrix[row][col] = matrix[row][col].add(&coeff);
            }
        }
    }
    let mut rhs = vec![RationalFunction2::zero(); dim];
    rhs[0] = RationalFunction2::one();
    let from_vec = |v: Vec<RationalFunction2>| {
        let mut out = SymbolElement::zero(spec);
        for (pos, value) in v.into_iter().enumerate() {
            out.add_term(((pos / n) as u32, (pos % n) as u32), value);
        }
        out
    };
    match solve_square(&matrix, &rhs) {
        LinearSolution::Unique(u) => {
            let u = from_vec(u);
            debug_assert!(sym_mul(x, &u)? == SymbolElement::one(spec));
            debug_assert!(sym_mul(&u, x)? == SymbolElement::one(spec));
            Ok(SymInverse::Inverse(u))
        }
        LinearSolution::Singular { kernel } => {
            let w = from_vec(kernel);
            debug_assert!(!w.is_zero());
            debug_assert!(sym_mul(x, &w)?.is_zero());
            Ok(SymInverse::ZeroDivisor(w))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        for n in [2u64, 3, 4, 6] {
            let spec = SymbolAlgebraSpec::witness_spec(n);
            let y = SymbolElement::gen_y(&spec);
            let z = SymbolElement::gen_z(&spec);
            // Y^n = a, Z^n = b.
            assert_eq!(
                y.pow(n as u32).unwrap(),
                SymbolElement::scalar(&spec, spec.a().clone()),
                "Y^{n} = a"
            );
            assert_eq!(
                z.pow(n as u32).unwrap(),
                SymbolElement::scalar(&spec, spec.b().clone()),
                "Z^{n} = b"
            );
            // YZ = zeta ZY.
            let yz = sym_mul(&y, &z).unwrap();
            let zy = sym_mul(&z, &y).unwrap();
            assert_eq!(
                yz,
                zy.scale(&RationalFunction2::constant(spec.zeta().clone()))
            );
        }
    }

    #[test]
    fn wraparound_multiplies_by_a_once() {
        let spec = SymbolAlgebraSpec::witness_spec(4);
        let y = SymbolElement::gen_y(&spec);
        let y3 = SymbolElement::basis(&spec, 3, 0);
        let prod = sym_mul(&y3, &y).unwrap();
        assert_eq!(prod, SymbolElement::scalar(&spec, spec.a().clone()));
    }

    #[test]
    fn identity_is_neutral() {
        let spec = SymbolAlgebraSpec::witness_spec(3);
        let one = SymbolElement::one(&spec);
        let x = SymbolElement::basis(&spec, 2, 1)
            .scale(spec.a())
            .add(&SymbolElement::basis(&spec, 0, 2))
            .unwrap();
        assert_eq!(sym_mul(&one, &x).unwrap(), x);
        assert_eq!(sym_mul(&x, &one).unwrap(), x);
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let s1 = SymbolAlgebraSpec::witness_spec(2);
        let s2 = SymbolAlgebraSpec::with_canonical_root(
            2,
            RationalFunction2::from_integer(1),
            RationalFunction2::from_integer(1),
        )
        .unwrap();
        let x = SymbolElement::gen_y(&s1);
        let y = SymbolElement::gen_y(&s2);
        assert_eq!(sym_mul(&x, &y).unwrap_err(), Error::AlgebraMismatch);
    }

    #[test]
    fn division_criterion_on_witness_spec() {
        for n in [2u64, 3, 5, 8, 12] {
            let spec = SymbolAlgebraSpec::witness_spec(n);
            let c = division_value_criterion(&spec).unwrap();
            assert_eq!(c.value_a, RankTwoValue(1, -1));
            assert_eq!(c.value_b, RankTwoValue(0, 1));
            assert_eq!(c.det, 1);
            assert!(c.is_division);
        }
    }

    #[test]
    fn division_criterion_negative_and_positive() {
        use crate::bipoly::poly_i64;
        let f = RationalFunction2::from_poly(poly_i64(&[(1, 0, 1)]));
        let t = RationalFunction2::from_poly(poly_i64(&[(0, 1, 1)]));
        // a = b = f: both values (1, 0), subgroup too small.
        let spec = SymbolAlgebraSpec::with_canonical_root(3, f.clone(), f.clone()).unwrap();
        let c = division_value_criterion(&spec).unwrap();
        assert!(!c.is_division);
        assert!(c.subgroup_order <= 3);
        // a = f, b = t: unimodular values.
        let spec = SymbolAlgebraSpec::with_canonical_root(3, f, t).unwrap();
        assert!(division_value_criterion(&spec).unwrap().is_division);
    }

    #[test]
    fn maximal_subfield_cases() {
        // q = 2, q' = 3 on the n = 6 spec.
        let spec = SymbolAlgebraSpec::witness_spec(6);
        let report = maximal_subfield_check(&spec, 2, 3).unwrap();
        assert!(report.ok, "{report:?}");
        assert_eq!(report.dimension, 6);

        // q = n, q' = 1 degenerates to scalar z.
        let spec = SymbolAlgebraSpec::witness_spec(4);
        let report = maximal_subfield_check(&spec, 4, 1).unwrap();
        assert!(report.ok, "{report:?}");

        // q = q' = 2 on n = 4: zeta^4 = 1 makes y, z commute.
        let report = maximal_subfield_check(&spec, 2, 2).unwrap();
        assert!(report.ok, "{report:?}");

        assert!(maximal_subfield_check(&spec, 3, 1).is_err());
    }

    #[test]
    fn inverse_of_y() {
        let spec = SymbolAlgebraSpec::witness_spec(3);
        let y = SymbolElement::gen_y(&spec);
        match sym_inverse(&y).unwrap() {
            SymInverse::Inverse(u) => {
                assert_eq!(sym_mul(&y, &u).unwrap(), SymbolElement::one(&spec));
                // u = a^{-1} Y^{n-1}.
                let expect = SymbolElement::term(&spec, 2, 0, spec.a().inv().unwrap());
                assert_eq!(u, expect);
            }
            SymInverse::ZeroDivisor(_) => panic!("Y is invertible"),
        }
    }

    #[test]
    fn inverse_of_one() {
        let spec = SymbolAlgebraSpec::witness_spec(2);
        match sym_inverse(&SymbolElement::one(&spec)).unwrap() {
            SymInverse::Inverse(u) => assert_eq!(u, SymbolElement::one(&spec)),
            SymInverse::ZeroDivisor(_) => panic!("1 is invertible"),
        }
    }

    #[test]
    fn split_algebra_zero_divisor() {
        // a = b = 1, n = 2: 1 + Y annihilates 1 - Y.
        let spec = SymbolAlgebraSpec::with_canonical_root(
            2,
            RationalFunction2::from_integer(1),
            RationalFunction2::from_integer(1),
        )
        .unwrap();
        let x = SymbolElement::one(&spec)
            .add(&SymbolElement::gen_y(&spec))
            .unwrap();
        match sym_inverse(&x).unwrap() {
            SymInverse::Inverse(_) => panic!("1 + Y is a zero divisor in the split algebra"),
            SymInverse::ZeroDivisor(w) => {
                assert!(!w.is_zero());
                assert!(sym_mul(&x, &w).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn zero_inverse_is_an_error() {
        let spec = SymbolAlgebraSpec::witness_spec(2);
        assert_eq!(
            sym_inverse(&SymbolElement::zero(&spec)).unwrap_err(),
            Error::DivisionByZero
        );
    }
}
