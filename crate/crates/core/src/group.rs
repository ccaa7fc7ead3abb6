//! Finite permutation groups: closure enumeration, Sylow subgroups via
//! normalizer growth, abelian rank and invariant-factor decomposition,
//! metacyclic tests, and the admissibility verdicts.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use crate::arith::{factorize, gcd_u64};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ENUMERATION_BOUND: usize = 200_000;

/// A finite permutation group given by generators, with a lazily computed
/// element list. The element list is sorted, so element indices are
/// canonical.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    max_order: usize,
    elements: OnceLock<Result<Vec<Perm>>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parse("degree must be at least 1".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Parse(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            max_order: DEFAULT_ENUMERATION_BOUND,
            elements: OnceLock::new(),
        })
    }

    pub fn with_max_order(mut self, bound: usize) -> Self {
        self.max_order = bound;
        self
    }

    /// Build from an element set (used for Sylow subgroups as groups).
    pub fn from_elements(degree: usize, elements: &[Perm]) -> Result<Self> {
        Self::new(degree, elements.to_vec())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Breadth-first closure of the generators under composition; sorted.
    pub fn enumerate(&self) -> Result<&[Perm]> {
        self.elements
            .get_or_init(|| closure(self.degree, &self.generators, self.max_order))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.enumerate()?.len() as u64)
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        Ok(self.enumerate()?.binary_search(p).is_ok())
    }
}

/// Closure of a seed set under composition and inverse, capped at `bound`
/// elements. The result is sorted.
pub fn closure(degree: usize, seed: &[Perm], bound: usize) -> Result<Vec<Perm>> {
    let mut set: HashSet<Perm> = HashSet::new();
    set.insert(Perm::identity(degree));
    let mut frontier: Vec<Perm> = vec![Perm::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in seed {
            let y = g.compose(&x);
            if !set.contains(&y) {
                if set.len() >= bound {
                    return Err(Error::GroupTooLarge { bound });
                }
                set.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    // Finite closure under left multiplication by generators starting from
    // the identity yields the generated subgroup (inverses come for free
    // in a finite group).
    let mut out: Vec<Perm> = set.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

fn contains_sorted(sorted: &[Perm], p: &Perm) -> bool {
    sorted.binary_search(p).is_ok()
}

/// Sylow subgroup data at a prime.
#[derive(Clone, Debug)]
pub struct SylowData {
    pub prime: u64,
    /// Sorted element list of the subgroup.
    pub elements: Vec<Perm>,
    /// |P| = full p-part of the group order.
    pub order: u64,
    pub is_abelian: bool,
    /// Minimal generator count, when abelian: log_p of the p-torsion count.
    pub rank: Option<u32>,
    /// Invariant factors (q, q'), q >= q', with q * q' = |P|, when abelian
    /// of rank at most two; q' = 1 for cyclic subgroups.
    pub invariant_pair: Option<(u64, u64)>,
}

/// The p-part of n.
fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        out *= p;
        n /= p;
    }
    out
}

/// Strip the p-part from the order of an element: x^(p-free part of its
/// order) has p-power order.
fn p_power_component(x: &Perm, p: u64) -> Perm {
    let ord = x.order();
    let mut m = ord;
    while m.is_multiple_of(p) {
        m /= p;
    }
    x.pow(m as i64)
}

fn normalizes(g: &Perm, sub: &[Perm]) -> bool {
    sub.iter().all(|s| contains_sorted(sub, &s.conjugate_by(g)))
}

/// Construct a Sylow p-subgroup by normalizer growth: start from one
/// p-element and repeatedly adjoin p-elements of the normalizer of the
/// current p-subgroup until the full p-part of the group order is reached.
pub fn sylow(group: &PermGroup, p: u64) -> Result<SylowData> {
    if !crate::arith::is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let elems = group.enumerate()?;
    let n = elems.len() as u64;
    let target = p_part(n, p);
    let degree = group.degree();
    let mut sub: Vec<Perm> = vec![Perm::identity(degree)];
    if target > 1 {
        let seed = elems
            .iter()
            .find(|x| x.order() % p == 0)
            .expect("Cauchy: a p-element exists when p divides the order");
        sub = closure(degree, &[p_power_component(seed, p)], elems.len())?;
        while (sub.len() as u64) < target {
            let mut grown = false;
            for g in elems {
                if !normalizes(g, &sub) {
                    continue;
                }
                let y = p_power_component(g, p);
                if y.is_identity() || contains_sorted(&sub, &y) {
                    continue;
                }
                let mut seed: Vec<Perm> = sub.clone();
                seed.push(y);
                sub = closure(degree, &seed, elems.len())?;
                grown = true;
                break;
            }
            assert!(
                grown,
                "normalizer growth must reach the full Sylow subgroup"
            );
        }
    }
    Ok(sylow_data_from_elements(p, sub))
}

fn sylow_data_from_elements(p: u64, elements: Vec<Perm>) -> SylowData {
    let order = elements.len() as u64;
    let (is_abelian, rank) = abelian_rank(&elements, p);
    let invariant_pair = if is_abelian && rank.is_some_and(|r| r <= 2) {
        Some(abelian_decompose(&elements, p).expect("rank <= 2 was just checked"))
    } else {
        None
    };
    SylowData {
        prime: p,
        elements,
        order,
        is_abelian,
        rank,
        invariant_pair,
    }
}

/// Abelian test plus rank for a p-group given by its sorted element list.
/// The rank of an abelian p-group is log_p of the number of elements with
/// x^p = 1; `None` when the group is not abelian.
pub fn abelian_rank(elements: &[Perm], p: u64) -> (bool, Option<u32>) {
    let is_abelian = elements.iter().enumerate().all(|(i, a)| {
        elements
            .iter()
            .skip(i + 1)
            .all(|b| a.compose(b) == b.compose(a))
    });
    if !is_abelian {
        return (false, None);
    }
    let torsion = elements
        .iter()
        .filter(|x| x.pow(p as i64).is_identity())
        .count() as u64;
    let mut rank = 0u32;
    let mut acc = 1u64;
    while acc < torsion {
        acc *= p;
        rank += 1;
    }
    debug_assert_eq!(acc, torsion, "p-torsion count must be a power of p");
    (true, Some(rank))
}

/// Decompose an abelian p-group of rank at most two as C_q x C_q' with
/// q >= q': take a generator of maximal order q, then search exhaustively
/// for a complement whose cyclic span meets it trivially.
pub fn abelian_decompose(elements: &[Perm], p: u64) -> Result<(u64, u64)> {
    let (is_abelian, rank) = abelian_rank(elements, p);
    if !is_abelian || rank.is_none_or(|r| r > 2) {
        return Err(Error::NotRankTwoAbelian);
    }
    let total = elements.len() as u64;
    if total == 1 {
        return Ok((1, 1));
    }
    let g = elements
        .iter()
        .max_by_key(|x| x.order())
        .expect("nonempty group");
    let q = g.order();
    if q == total {
        return Ok((q, 1));
    }
    let degree = g.degree();
    let span_g = closure(degree, std::slice::from_ref(g), elements.len())?;
    let qp = total / q;
    for h in elements {
        if h.order() != qp {
            continue;
        }
        let span_h = closure(degree, std::slice::from_ref(h), elements.len())?;
        let trivial_meet = span_h
            .iter()
            .all(|x| x.is_identity() || !contains_sorted(&span_g, x));
        if !trivial_meet {
            continue;
        }
        // The product set <g> * <h> must reconstruct the whole group.
        let mut product: BTreeSet<Perm> = BTreeSet::new();
        for a in &span_g {
            for b in &span_h {
                product.insert(a.compose(b));
            }
        }
        if product.len() == elements.len() {
            return Ok((q, qp));
        }
    }
    Err(Error::NotRankTwoAbelian)
}

/// Witness for a positive metacyclic test: a cyclic normal subgroup and a
/// coset generating the cyclic quotient.
#[derive(Clone, Debug)]
pub struct MetacyclicWitness {
    /// Generator of the cyclic normal subgroup N.
    pub normal_generator: Perm,
    /// Representative of a coset whose image generates the quotient G/N.
    pub quotient_generator: Perm,
}

/// Brute-force metacyclic test: over every cyclic subgroup N = <x>, check
/// normality against the generators and cyclicity of the quotient via
/// coset multiplication.
pub fn is_metacyclic(group: &PermGroup) -> Result<(bool, Option<MetacyclicWitness>)> {
    let elems = group.enumerate()?;
    let n = elems.len();
    let mut seen_subgroups: HashSet<Vec<Perm>> = HashSet::new();
    for x in elems {
        let sub = closure(group.degree(), std::slice::from_ref(x), n)?;
        if !seen_subgroups.insert(sub.clone()) {
            continue;
        }
        let normal = group.generators().iter().all(|g| normalizes(g, &sub));
        if !normal {
            continue;
        }
        if let Some(rep) = cyclic_quotient_generator(elems, &sub) {
            return Ok((
                true,
                Some(MetacyclicWitness {
                    normal_generator: x.clone(),
                    quotient_generator: rep,
                }),
            ));
        }
    }
    Ok((false, None))
}

/// When G/N is cyclic, return a representative of a generating coset.
/// `elems` must be the sorted full element list, `normal` a normal
/// subgroup of it.
fn cyclic_quotient_generator(elems: &[Perm], normal: &[Perm]) -> Option<Perm> {
    let quot_order = elems.len() / normal.len();
    if quot_order == 1 {
        return Some(Perm::identity(elems[0].degree()));
    }
    let index_of = |p: &Perm| elems.binary_search(p).expect("closed under multiplication");
    // Assign a coset id to every element.
    let mut coset_of: Vec<usize> = vec![usize::MAX; elems.len()];
    let mut reps: Vec<&Perm> = Vec::new();
    for (i, e) in elems.iter().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(e);
        for s in normal {
            coset_of[index_of(&e.compose(s))] = id;
        }
    }
    let trivial = coset_of[index_of(&Perm::identity(elems[0].degree()))];
    for rep in &reps {
        // Order of the coset of rep in the quotient.
        let mut acc: Perm = (*rep).clone();
        let mut k = 1usize;
        while coset_of[index_of(&acc)] != trivial && k <= quot_order {
            acc = rep.compose(&acc);
            k += 1;
        }
        if k == quot_order && coset_of[index_of(&acc)] == trivial {
            return Some((*rep).clone());
        }
    }
    None
}

/// Which Sylow condition the verdict demands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictMode {
    /// Abelian of rank at most two.
    Rank2,
    /// Metacyclic.
    Metacyclic,
}

impl std::fmt::Display for VerdictMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerdictMode::Rank2 => write!(f, "rank2"),
            VerdictMode::Metacyclic => write!(f, "metacyclic"),
        }
    }
}

/// Per-prime part of a verdict report.
#[derive(Clone, Debug)]
pub struct PrimeVerdict {
    pub prime: u64,
    pub sylow: SylowData,
    pub satisfied: bool,
    pub metacyclic_witness: Option<MetacyclicWitness>,
}

/// Full admissibility verdict: the group order, its factorization, and
/// one entry per prime divisor (minus the excluded prime).
#[derive(Debug)]
pub struct VerdictReport {
    pub mode: VerdictMode,
    pub order: u64,
    pub factorization: Vec<(u64, u32)>,
    pub excluded_prime: Option<u64>,
    pub primes: Vec<PrimeVerdict>,
    pub verdict: bool,
}

/// Evaluate the per-prime Sylow condition for every prime dividing the
/// group order, except the optional excluded prime (modeling a forbidden
/// residue characteristic).
pub fn admissibility_verdict(
    group: &PermGroup,
    mode: VerdictMode,
    excluded_prime: Option<u64>,
) -> Result<VerdictReport> {
    let order = group.order()?;
    let factorization = factorize(order);
    let mut primes = Vec::new();
    let mut verdict = true;
    for &(p, _) in &factorization {
        if excluded_prime == Some(p) {
            continue;
        }
        let sy = sylow(group, p)?;
        let (satisfied, witness) = match mode {
            VerdictMode::Rank2 => (sy.is_abelian && sy.rank.is_some_and(|r| r <= 2), None),
            VerdictMode::Metacyclic => {
                let sub = PermGroup::from_elements(group.degree(), &sy.elements)?;
                let (ok, w) = is_metacyclic(&sub)?;
                (ok, w)
            }
        };
        verdict &= satisfied;
        primes.push(PrimeVerdict {
            prime: p,
            sylow: sy,
            satisfied,
            metacyclic_witness: witness,
        });
    }
    Ok(VerdictReport {
        mode,
        order,
        factorization,
        excluded_prime,
        primes,
        verdict,
    })
}

/// Presentation data for C_e x| C_m with action sigma -> sigma^i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetacyclicDescriptor {
    /// Order of the distinguished cyclic normal subgroup generator.
    pub e: u64,
    /// Order of the quotient generator image.
    pub m: u64,
    /// Action exponent: conjugation sends sigma to sigma^i.
    pub i: u64,
}

impl MetacyclicDescriptor {
    pub fn validate(&self) -> Result<()> {
        if self.e < 1 || self.m < 1 {
            return Err(Error::InvalidDescriptor("e and m must be positive".into()));
        }
        if self.i < 1 || self.i >= self.e {
            return Err(Error::InvalidDescriptor(format!(
                "need 1 <= i < e (got i = {}, e = {})",
                self.i, self.e
            )));
        }
        if gcd_u64(self.i, self.e) != 1 {
            return Err(Error::InvalidDescriptor(format!(
                "gcd(i, e) = {} must be 1",
                gcd_u64(self.i, self.e)
            )));
        }
        if crate::arith::pow_mod(self.i, self.m, self.e) != 1 {
            return Err(Error::InvalidDescriptor(format!(
                "i^m = {} (mod e) must be 1",
                crate::arith::pow_mod(self.i, self.m, self.e)
            )));
        }
        Ok(())
    }
}

/// Realize the descriptor as a permutation group on e*m points (the
/// regular action) and report whether it is abelian. The abelian flag is
/// computed twice, from the group and from the congruence i = 1 (mod e),
/// and the two computations must agree.
pub fn metacyclic_descriptor_group(d: &MetacyclicDescriptor) -> Result<(PermGroup, bool)> {
    d.validate()?;
    let (e, m, i) = (d.e as usize, d.m as usize, d.i);
    let points = e * m;
    let idx = |s: usize, t: usize| s + e * t;
    // sigma: (s, t) -> (s + 1, t); tau: (s, t) -> (s * i, t + 1).
    let mut sigma_map = vec![0usize; points];
    let mut tau_map = vec![0usize; points];
    for s in 0..e {
        for t in 0..m {
            sigma_map[idx(s, t)] = idx((s + 1) % e, t);
            tau_map[idx(s, t)] = idx((s as u64 * i % e as u64) as usize, (t + 1) % m);
        }
    }
    let sigma = Perm::from_images(sigma_map)?;
    let tau = Perm::from_images(tau_map)?;
    let group = PermGroup::new(points, vec![sigma, tau])?;
    let elems = group.enumerate()?;
    if elems.len() != points {
        return Err(Error::InternalCheckFailed(format!(
            "descriptor group has order {} instead of {}",
            elems.len(),
            points
        )));
    }
    let group_abelian = elems.iter().enumerate().all(|(a, x)| {
        elems
            .iter()
            .skip(a + 1)
            .all(|y| x.compose(y) == y.compose(x))
    });
    let exponent_abelian = d.i % d.e == 1;
    if group_abelian != exponent_abelian {
        return Err(Error::InternalCheckFailed(format!(
            "descriptor abelian flags disagree: group says {group_abelian}, exponent says {exponent_abelian}"
        )));
    }
    Ok((group, group_abelian))
}

/// Largest degree accepted from group input files.
const MAX_INPUT_DEGREE: u64 = 100_000;

/// Parse a group from JSON ({"degree": d, "generators": ["(0 1)", ...]})
/// or from the plain-text form:
///
///   degree 4
///   gen (0 1)
///   gen (0 1 2 3)
pub fn parse_group_input(input: &str) -> Result<PermGroup> {
    if let Ok(v) = serde_json::from_str::<serde_json::Value>(input) {
        let degree = v
            .get("degree")
            .and_then(|d| d.as_u64())
            .filter(|d| (1..=MAX_INPUT_DEGREE).contains(d))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "\"degree\" must be an integer in 1..={MAX_INPUT_DEGREE}"
                ))
            })? as usize;
        let gens = v
            .get("generators")
            .and_then(|g| g.as_array())
            .ok_or_else(|| Error::Parse("missing \"generators\" array".into()))?;
        let mut generators = Vec::new();
        for g in gens {
            let s = g
                .as_str()
                .ok_or_else(|| Error::Parse("generators must be cycle strings".into()))?;
            generators.push(Perm::parse_cycles(degree, s)?);
        }
        return PermGroup::new(degree, generators);
    }
    let mut degree: Option<usize> = None;
    let mut generators: Vec<String> = Vec::new();
    for line in input.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree") {
            let d: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree line {line:?}")))?;
            if !(1..=MAX_INPUT_DEGREE).contains(&(d as u64)) {
                return Err(Error::Parse(format!(
                    "degree must be in 1..={MAX_INPUT_DEGREE}"
                )));
            }
            degree = Some(d);
        } else if let Some(rest) = line.strip_prefix("gen") {
            generators.push(rest.trim().to_string());
        } else {
            return Err(Error::Parse(format!("unrecognized line {line:?}")));
        }
    }
    let degree = degree.ok_or_else(|| Error::Parse("no degree line".into()))?;
    let gens = generators
        .iter()
        .map(|s| Perm::parse_cycles(degree, s))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}
