//! Exact computational algebra for admissibility of finite groups over
//! arithmetic function fields.
//!
//! The crate decides, for a finite permutation group, whether every Sylow
//! subgroup is abelian of rank at most two, and constructs machine
//! re-verifiable witness certificates backing the positive answer: for
//! each prime divisor a symbol algebra over Q(zeta)(f, t) whose division
//! property, maximal commutative subfield, branch residues, Kummer
//! nondegeneracy and tame ramification are all checked by exact
//! arithmetic.
//!
//! Layering, bottom up:
//!
//! * [`cyclotomic`], [`bipoly`], [`unipoly`], [`ratfun`], [`text`] — the
//!   exact arithmetic foundation, the field F = Q(zeta)(f, t), and its
//!   canonical ASCII grammar;
//! * [`valuation`] — prime valuations, residues, the rank-two
//!   lexicographic valuation, and power-class orders;
//! * [`perm`], [`group`] — the permutation-group engine with Sylow
//!   machinery and the admissibility verdicts;
//! * [`symbol`], [`linalg`] — symbol algebras, the value-group division
//!   criterion, and exact inversion;
//! * [`kummer`], [`crossed`] — Kummer Galois algebras, 2-cocycles and
//!   crossed products;
//! * [`ramify`] — tame-symbol ramification;
//! * [`witness`] — the end-to-end certificate builder and verifier.

pub mod arith;
pub mod bipoly;
pub mod crossed;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod kummer;
pub mod linalg;
pub mod perm;
pub mod ramify;
pub mod ratfun;
pub mod symbol;
pub mod text;
pub mod unipoly;
pub mod valuation;
pub mod witness;

pub use bipoly::BivariatePolynomial;
pub use crossed::{
    cocycle_check, crossed_product_mul, induced_algebra, symbol_derived_cocycle, Cocycle,
    CocycleCheck, CrossedProductElement, InducedGaloisAlgebra,
};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
pub use error::{Error, Result};
pub use group::{
    abelian_decompose, abelian_rank, admissibility_verdict, is_metacyclic,
    metacyclic_descriptor_group, parse_group_input, sylow, MetacyclicDescriptor, PermGroup,
    SylowData, VerdictMode, VerdictReport,
};
pub use kummer::{
    fixed_subspace_dimension, galois_apply, kummer_mul, nondegenerate_kummer_check, KummerAlgebra,
    KummerElement, KummerNondegeneracy, PElement,
};
pub use perm::Perm;
pub use ramify::{
    determined_by_ramification, tame_symbol, unramified_on_list, RamificationDatum,
    RamificationSweep,
};
pub use ratfun::RationalFunction2;
pub use symbol::{
    division_value_criterion, maximal_subfield_check, sym_inverse, sym_mul, value_subgroup_order,
    DivisionCriterion, SymInverse, SymbolAlgebraSpec, SymbolElement,
};
pub use unipoly::{FactoredUni, UniPoly, UniRatFun};
pub use valuation::{
    lex_valuation, lex_valuation_composite, power_class_order, prime_valuation, residue, PrimeSpec,
    RankTwoValue,
};
pub use witness::{
    build_witness, gcd_index_check, verify_certificate, VerificationReport, WitnessCertificate,
};
