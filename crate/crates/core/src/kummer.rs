//! Kummer Galois algebras L = F[y, z] / (y^q - a, z^q' - b) over
//! F = Q(zeta)(f, t), with the coordinatewise action of P = Z/q x Z/q'
//! through roots of unity: (s, s') sends y to zeta_q^s y and z to
//! zeta_q'^s' z.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::linalg::{rank, solve_square, LinearSolution};
use crate::ratfun::RationalFunction2;
use crate::valuation::{prime_valuation, PrimeSpec};

/// An element of the acting group P = Z/q x Z/q'.
pub type PElement = (u64, u64);

/// The algebra data: exponents q, q', base elements a, b, and the
/// distinguished roots of unity zeta_q = zeta^q', zeta_q' = zeta^q for a
/// primitive qq'-th root zeta.
#[derive(Debug)]
pub struct KummerAlgebra {
    q: u64,
    q_prime: u64,
    a: RationalFunction2,
    b: RationalFunction2,
    zeta: CyclotomicNumber,
    /// zeta_q^0 .. zeta_q^(q-1)
    zeta_q_powers: Vec<CyclotomicNumber>,
    /// zeta_q'^0 .. zeta_q'^(q'-1)
    zeta_qp_powers: Vec<CyclotomicNumber>,
}

impl KummerAlgebra {
    pub fn new(
        q: u64,
        q_prime: u64,
        a: RationalFunction2,
        b: RationalFunction2,
    ) -> Result<Arc<Self>> {
        if q < 1 || q_prime < 1 {
            return Err(Error::InvalidInput("q and q' must be positive".into()));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidInput("a and b must be nonzero".into()));
        }
        let n = q * q_prime;
        let zeta = CyclotomicNumber::root_of_unity(n);
        let zeta_q = zeta.pow(q_prime as i64).expect("positive power");
        let zeta_qp = zeta.pow(q as i64).expect("positive power");
        let powers = |base: &CyclotomicNumber, count: u64| {
            let mut out = Vec::with_capacity(count as usize);
            let mut p = CyclotomicNumber::one(base.order());
            for _ in 0..count {
                out.push(p.clone());
                p = p.mul(base);
            }
            out
        };
        Ok(Arc::new(KummerAlgebra {
            q,
            q_prime,
            a,
            b,
            zeta,
            zeta_q_powers: powers(&zeta_q, q),
            zeta_qp_powers: powers(&zeta_qp, q_prime),
        }))
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_prime(&self) -> u64 {
        self.q_prime
    }

    pub fn a(&self) -> &RationalFunction2 {
        &self.a
    }

    pub fn b(&self) -> &RationalFunction2 {
        &self.b
    }

    /// The primitive qq'-th root of unity the action is built from.
    pub fn zeta(&self) -> &CyclotomicNumber {
        &self.zeta
    }

    pub fn dimension(&self) -> u64 {
        self.q * self.q_prime
    }

    /// Group elements of P = Z/q x Z/q' in the canonical order
    /// (s, s') with s major.
    pub fn group_elements(&self) -> Vec<PElement> {
        let mut out = Vec::with_capacity(self.dimension() as usize);
        for s in 0..self.q {
            for sp in 0..self.q_prime {
                out.push((s, sp));
            }
        }
        out
    }

    pub fn group_index(&self, g: PElement) -> usize {
        (g.0 * self.q_prime + g.1) as usize
    }

    pub fn group_add(&self, g: PElement, h: PElement) -> PElement {
        ((g.0 + h.0) % self.q, (g.1 + h.1) % self.q_prime)
    }

    pub fn group_neg(&self, g: PElement) -> PElement {
        ((self.q - g.0) % self.q, (self.q_prime - g.1) % self.q_prime)
    }

    fn zeta_q_pow(&self, k: u64) -> &CyclotomicNumber {
        &self.zeta_q_powers[(k % self.q) as usize]
    }

    fn zeta_qp_pow(&self, k: u64) -> &CyclotomicNumber {
        &self.zeta_qp_powers[(k % self.q_prime) as usize]
    }

    fn same_as(&self, other: &Self) -> bool {
        self.q == other.q && self.q_prime == other.q_prime && self.a == other.a && self.b == other.b
    }
}

/// An element on the basis y^i z^j, 0 <= i < q, 0 <= j < q'.
#[derive(Clone)]
pub struct KummerElement {
    algebra: Arc<KummerAlgebra>,
    coeffs: BTreeMap<(u32, u32), RationalFunction2>,
}

impl KummerElement {
    pub fn zero(algebra: &Arc<KummerAlgebra>) -> Self {
        KummerElement {
            algebra: Arc::clone(algebra),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(algebra: &Arc<KummerAlgebra>, value: RationalFunction2) -> Self {
        Self::term(algebra, 0, 0, value)
    }

    pub fn one(algebra: &Arc<KummerAlgebra>) -> Self {
        Self::scalar(algebra, RationalFunction2::one())
    }

    pub fn term(algebra: &Arc<KummerAlgebra>, i: u32, j: u32, value: RationalFunction2) -> Self {
        assert!(
            (i as u64) < algebra.q && (j as u64) < algebra.q_prime,
            "exponents out of range"
        );
        let mut coeffs = BTreeMap::new();
        if !value.is_zero() {
            coeffs.insert((i, j), value);
        }
        KummerElement {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    pub fn basis(algebra: &Arc<KummerAlgebra>, i: u32, j: u32) -> Self {
        Self::term(algebra, i, j, RationalFunction2::one())
    }

    pub fn gen_y(algebra: &Arc<KummerAlgebra>) -> Self {
        if algebra.q == 1 {
            Self::scalar(algebra, algebra.a.clone())
        } else {
            Self::basis(algebra, 1, 0)
        }
    }

    pub fn gen_z(algebra: &Arc<KummerAlgebra>) -> Self {
        if algebra.q_prime == 1 {
            Self::scalar(algebra, algebra.b.clone())
        } else {
            Self::basis(algebra, 0, 1)
        }
    }

    pub fn algebra(&self) -> &Arc<KummerAlgebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), RationalFunction2> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.same_as(&other.algebra) {
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
        KummerElement {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v.neg())).collect(),
        }
    }

    pub fn scale(&self, r: &RationalFunction2) -> Self {
        if r.is_zero() {
            return Self::zero(&self.algebra);
        }
        KummerElement {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v.mul(r))).collect(),
        }
    }

    pub fn scale_cyclotomic(&self, c: &CyclotomicNumber) -> Self {
        self.scale(&RationalFunction2::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(&self.algebra);
        for _ in 0..e {
            acc = kummer_mul(&acc, self)?;
        }
        Ok(acc)
    }

    /// Invert, or report `None` for non-units. Single-term elements invert
    /// directly through the rewriting rules; general elements go through
    /// the linear solver.
    pub fn inverse(&self) -> Result<Option<KummerElement>> {
        if self.is_zero() {
            return Ok(None);
        }
        let alg = &self.algebra;
        if self.coeffs.len() == 1 {
            let (&(i, j), c) = self.coeffs.iter().next().unwrap();
            let mut value = match c.inv() {
                Ok(v) => v,
                Err(_) => return Ok(None),
            };
            let (mut ii, mut jj) = (0u32, 0u32);
            if i > 0 {
                value = value.mul(&alg.a.inv().expect("a is nonzero"));
                ii = alg.q as u32 - i;
            }
            if j > 0 {
                value = value.mul(&alg.b.inv().expect("b is nonzero"));
                jj = alg.q_prime as u32 - j;
            }
            return Ok(Some(Self::term(
                alg,
                ii % alg.q as u32,
                jj % alg.q_prime as u32,
                value,
            )));
        }
        let dim = alg.dimension() as usize;
        let qp = alg.q_prime as usize;
        let idx = |i: u32, j: u32| (i as usize) * qp + j as usize;
        let mut matrix = vec![vec![RationalFunction2::zero(); dim]; dim];
        for (&(i, j), c) in &self.coeffs {
            for k in 0..alg.q as u32 {
                for l in 0..alg.q_prime as u32 {
                    let mut coeff = c.clone();
                    let (mut iy, mut jz) = (i + k, j + l);
                    if iy as u64 >= alg.q {
                        coeff = coeff.mul(&alg.a);
                        iy -= alg.q as u32;
                    }
                    if jz as u64 >= alg.q_prime {
                        coeff = coeff.mul(&alg.b);
                        jz -= alg.q_prime as u32;
                    }
                    let row = idx(iy, jz);
                    matrix[row][idx(k, l)] = matrix[row][idx(k, l)].add(&coeff);
                }
            }
        }
        let mut rhs = vec![RationalFunction2::zero(); dim];
        rhs[0] = RationalFunction2::one();
        match solve_square(&matrix, &rhs) {
            LinearSolution::Unique(v) => {
                let mut out = Self::zero(alg);
                for (pos, value) in v.into_iter().enumerate() {
                    out.add_term(((pos / qp) as u32, (pos % qp) as u32), value);
                }
                Ok(Some(out))
            }
            LinearSolution::Singular { .. } => Ok(None),
        }
    }
}

impl PartialEq for KummerElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.same_as(&other.algebra))
            && self.coeffs == other.coeffs
    }
}

impl Eq for KummerElement {}

impl fmt::Display for KummerElement {
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
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("z".into()),
                _ => parts.push(format!("z^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for KummerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Kummer({self})")
    }
}

/// Commutative product with the rewriting rules y^q = a, z^q' = b.
pub fn kummer_mul(x: &KummerElement, y: &KummerElement) -> Result<KummerElement> {
    x.check_compatible(y)?;
    let alg = &x.algebra;
    let (q, qp) = (alg.q as u32, alg.q_prime as u32);
    let mut out = KummerElement::zero(alg);
    for (&(i1, j1), c1) in &x.coeffs {
        for (&(i2, j2), c2) in &y.coeffs {
            let mut coeff = c1.mul(c2);
            let (mut iy, mut jz) = (i1 + i2, j1 + j2);
            if iy >= q {
                coeff = coeff.mul(&alg.a);
                iy -= q;
            }
            if jz >= qp {
                coeff = coeff.mul(&alg.b);
                jz -= qp;
            }
            out.add_term((iy, jz), coeff);
        }
    }
    Ok(out)
}

/// Apply the group element (s, s') of P = Z/q x Z/q': the coefficient of
/// y^i z^j is multiplied by zeta_q^(s i) * zeta_q'^(s' j).
pub fn galois_apply(g: PElement, x: &KummerElement) -> KummerElement {
    let alg = &x.algebra;
    let (s, sp) = (g.0 % alg.q, g.1 % alg.q_prime);
    let mut out = KummerElement::zero(alg);
    for (&(i, j), c) in &x.coeffs {
        let mult = alg
            .zeta_q_pow(s * i as u64)
            .mul(alg.zeta_qp_pow(sp * j as u64));
        out.add_term((i, j), c.scale(&mult));
    }
    out
}

/// Dimension of the subspace fixed by the full P-action, computed by
/// exact linear algebra on the action of the two group generators (the
/// action is a homomorphism, so generator fixedness suffices).
pub fn fixed_subspace_dimension(algebra: &Arc<KummerAlgebra>) -> usize {
    let dim = algebra.dimension() as usize;
    let qp = algebra.q_prime as usize;
    let mut stacked: Vec<Vec<RationalFunction2>> = Vec::new();
    for gen in [(1u64, 0u64), (0, 1)] {
        // Rows of (action(gen) - identity) in the y^i z^j basis.
        for row in 0..dim {
            let (i, j) = ((row / qp) as u32, (row % qp) as u32);
            let e = KummerElement::basis(algebra, i, j);
            let image = galois_apply(gen, &e);
            let mut out_row = vec![RationalFunction2::zero(); dim];
            for (&(bi, bj), c) in image.coeffs() {
                let col = (bi as usize) * qp + bj as usize;
                out_row[col] = out_row[col].add(c);
            }
            out_row[row] = out_row[row].sub(&RationalFunction2::one());
            stacked.push(out_row);
        }
    }
    dim - rank(&stacked)
}

/// One certificate that an element is not a d-th power: a prime where its
/// valuation is not divisible by d.
#[derive(Clone, Debug)]
pub struct PowerObstruction {
    /// Which element: 'a' or 'b'.
    pub element: char,
    /// The prime divisor d being ruled out.
    pub divisor: u64,
    pub prime: PrimeSpec,
    pub valuation: i64,
}

/// Result of the Kummer nondegeneracy check.
#[derive(Clone, Debug)]
pub struct KummerNondegeneracy {
    pub certified: bool,
    pub certificates: Vec<PowerObstruction>,
    /// (element, divisor) pairs with no certificate found (inconclusive).
    pub missing: Vec<(char, u64)>,
}

/// Sound partial test that a is not a d-th power for any prime d | q and
/// b not a d-th power for any prime d | q': exhibit, for each d, a prime
/// in the list where the valuation is not divisible by d. Returns
/// inconclusive (certified = false) when some certificate is missing;
/// it never certifies falsely.
pub fn nondegenerate_kummer_check(
    q: u64,
    q_prime: u64,
    a: &RationalFunction2,
    b: &RationalFunction2,
    primes: &[PrimeSpec],
) -> Result<KummerNondegeneracy> {
    let mut certificates = Vec::new();
    let mut missing = Vec::new();
    for (label, elem, bound) in [('a', a, q), ('b', b, q_prime)] {
        for (d, _) in crate::arith::factorize(bound) {
            let mut found = false;
            for p in primes {
                let v = prime_valuation(elem, p)?;
                if v.rem_euclid(d as i64) != 0 {
                    certificates.push(PowerObstruction {
                        element: label,
                        divisor: d,
                        prime: p.clone(),
                        valuation: v,
                    });
                    found = true;
                    break;
                }
            }
            if !found {
                missing.push((label, d));
            }
        }
    }
    Ok(KummerNondegeneracy {
        certified: missing.is_empty(),
        certificates,
        missing,
    })
}
