//! Shared test corpus: named groups of order <= 60 with expected
//! verdicts, and brute-force subgroup oracles independent of the Sylow
//! construction under test.

use std::collections::HashSet;

use admissible::group::{abelian_rank, closure, is_metacyclic, PermGroup};
use admissible::perm::Perm;

pub struct CorpusGroup {
    pub name: &'static str,
    pub group: PermGroup,
    pub order: u64,
    pub rank2: bool,
    pub metacyclic: bool,
}

fn from_cycles(degree: usize, gens: &[&str]) -> PermGroup {
    let g = gens
        .iter()
        .map(|s| Perm::parse_cycles(degree, s).expect("valid cycles"))
        .collect();
    PermGroup::new(degree, g).expect("valid group")
}

/// SL(2, 3) acting on the 8 nonzero vectors of F_3^2.
fn sl23() -> PermGroup {
    let vectors: Vec<(u64, u64)> = (0..3u64)
        .flat_map(|x| (0..3u64).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |v: (u64, u64)| vectors.iter().position(|&w| w == v).unwrap();
    let act = |m: [[u64; 2]; 2]| {
        let images: Vec<usize> = vectors
            .iter()
            .map(|&(x, y)| {
                index((
                    (m[0][0] * x + m[0][1] * y) % 3,
                    (m[1][0] * x + m[1][1] * y) % 3,
                ))
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    // [[1,1],[0,1]] and [[0,-1],[1,0]] generate SL(2,3).
    let a = act([[1, 1], [0, 1]]);
    let b = act([[0, 2], [1, 0]]);
    PermGroup::new(8, vec![a, b]).unwrap()
}

/// The Heisenberg group modulo 3 (order 27, exponent 3) in its regular
/// representation: triples (a, b, c) with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
fn heisenberg3() -> PermGroup {
    let index = |a: u64, b: u64, c: u64| (a * 9 + b * 3 + c) as usize;
    let left_mul = |ga: u64, gb: u64, gc: u64| {
        let mut images = vec![0usize; 27];
        for a in 0..3u64 {
            for b in 0..3u64 {
                for c in 0..3u64 {
                    images[index(a, b, c)] =
                        index((ga + a) % 3, (gb + b) % 3, (gc + c + ga * b) % 3);
                }
            }
        }
        Perm::from_images(images).unwrap()
    };
    PermGroup::new(27, vec![left_mul(1, 0, 0), left_mul(0, 1, 0)]).unwrap()
}

/// The fixed corpus. Expected flags refer to the per-prime Sylow
/// conditions (rank-two abelian / metacyclic).
pub fn corpus() -> Vec<CorpusGroup> {
    let mk = |name, group: PermGroup, order, rank2, metacyclic| CorpusGroup {
        name,
        group,
        order,
        rank2,
        metacyclic,
    };
    vec![
        mk("C1", PermGroup::new(1, vec![]).unwrap(), 1, true, true),
        mk("C2", from_cycles(2, &["(0 1)"]), 2, true, true),
        mk("C6", from_cycles(6, &["(0 1 2 3 4 5)"]), 6, true, true),
        mk("C8", from_cycles(8, &["(0 1 2 3 4 5 6 7)"]), 8, true, true),
        mk("C12", from_cycles(7, &["(0 1 2 3)(4 5 6)"]), 12, true, true),
        mk(
            "C30",
            from_cycles(10, &["(0 1)(2 3 4)(5 6 7 8 9)"]),
            30,
            true,
            true,
        ),
        mk("S3", from_cycles(3, &["(0 1)", "(0 1 2)"]), 6, true, true),
        mk(
            "D4",
            from_cycles(4, &["(0 1 2 3)", "(0 2)"]),
            8,
            false,
            true,
        ),
        mk(
            "D5",
            from_cycles(5, &["(0 1 2 3 4)", "(1 4)(2 3)"]),
            10,
            true,
            true,
        ),
        mk(
            "D6",
            from_cycles(6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"]),
            12,
            true,
            true,
        ),
        mk(
            "Q8",
            from_cycles(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]),
            8,
            false,
            true,
        ),
        mk(
            "A4",
            from_cycles(4, &["(0 1 2)", "(1 2 3)"]),
            12,
            true,
            true,
        ),
        mk(
            "S4",
            from_cycles(4, &["(0 1)", "(0 1 2 3)"]),
            24,
            false,
            true,
        ),
        mk(
            "A5",
            from_cycles(5, &["(0 1 2)", "(0 1 2 3 4)"]),
            60,
            true,
            true,
        ),
        mk("SL(2,3)", sl23(), 24, false, true),
        mk(
            "(Z/2)^3",
            from_cycles(6, &["(0 1)", "(2 3)", "(4 5)"]),
            8,
            false,
            false,
        ),
        mk(
            "Z/4 x Z/2",
            from_cycles(6, &["(0 1 2 3)", "(4 5)"]),
            8,
            true,
            true,
        ),
        mk(
            "(Z/3)^2",
            from_cycles(6, &["(0 1 2)", "(3 4 5)"]),
            9,
            true,
            true,
        ),
        mk(
            "Z/6 x Z/2",
            from_cycles(8, &["(0 1 2 3 4 5)", "(6 7)"]),
            12,
            true,
            true,
        ),
        mk("Heis(3)", heisenberg3(), 27, false, false),
        mk(
            "(Z/3)^2 x C2",
            from_cycles(8, &["(0 1 2)", "(3 4 5)", "(6 7)"]),
            18,
            true,
            true,
        ),
    ]
}

fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        out *= p;
        n /= p;
    }
    out
}

fn p_exponent(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n.is_multiple_of(p) {
        k += 1;
        n /= p;
    }
    k
}

/// Enumerate ALL subgroups whose order is the full p-part of |G|, by
/// closing every subset of at most k p-power-order elements (a group of
/// order p^k needs at most k generators; the corpus keeps k <= 3).
pub fn all_sylow_subgroups(group: &PermGroup, p: u64) -> Vec<Vec<Perm>> {
    let elems = group.enumerate().expect("corpus groups enumerate");
    let n = elems.len() as u64;
    let target = p_part(n, p);
    let k = p_exponent(n, p);
    assert!(
        k <= 3,
        "oracle generator bound requires p-part exponent <= 3"
    );
    if target == 1 {
        return vec![vec![Perm::identity(group.degree())]];
    }
    let candidates: Vec<&Perm> = elems
        .iter()
        .filter(|e| {
            let o = e.order();
            o == 1 || p_part(o, p) == o
        })
        .collect();
    let mut found: HashSet<Vec<Perm>> = HashSet::new();
    let bound = elems.len();
    let mut consider = |seed: &[&Perm]| {
        let seed: Vec<Perm> = seed.iter().map(|p| (*p).clone()).collect();
        if let Ok(sub) = closure(group.degree(), &seed, bound) {
            if sub.len() as u64 == target {
                found.insert(sub);
            }
        }
    };
    for (i, a) in candidates.iter().enumerate() {
        consider(&[a]);
        if k >= 2 {
            for (j, b) in candidates.iter().enumerate().skip(i + 1) {
                consider(&[a, b]);
                if k >= 3 {
                    for c in candidates.iter().skip(j + 1) {
                        consider(&[a, b, c]);
                    }
                }
            }
        }
    }
    assert!(!found.is_empty(), "at least one Sylow subgroup exists");
    found.into_iter().collect()
}

/// Oracle for the rank-two verdict at one prime: every subgroup of full
/// p-power order must be abelian of rank at most two.
pub fn oracle_rank2_at(group: &PermGroup, p: u64) -> bool {
    all_sylow_subgroups(group, p).iter().all(|sub| {
        let (ab, rank) = abelian_rank(sub, p);
        ab && rank.is_some_and(|r| r <= 2)
    })
}

/// Oracle for the metacyclic verdict at one prime.
pub fn oracle_metacyclic_at(group: &PermGroup, p: u64) -> bool {
    all_sylow_subgroups(group, p).iter().all(|sub| {
        let as_group = PermGroup::from_elements(group.degree(), sub).unwrap();
        is_metacyclic(&as_group).unwrap().0
    })
}

/// All subgroups of full p-power order are conjugate to the given one.
pub fn all_conjugate_to(group: &PermGroup, p: u64, target: &[Perm]) -> bool {
    let elems = group.enumerate().unwrap();
    all_sylow_subgroups(group, p).iter().all(|sub| {
        elems.iter().any(|g| {
            let mut conj: Vec<Perm> = target.iter().map(|s| s.conjugate_by(g)).collect();
            conj.sort_unstable();
            conj == *sub
        })
    })
}
