//! Crate-wide error type.

use std::fmt;

/// Errors produced by exact-arithmetic and group operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inversion of the zero element of a field or algebra.
    DivisionByZero,
    /// A valuation was requested for the zero element.
    ValuationOfZero,
    /// Residue requested at a prime where the element is not a unit.
    NotAUnitAtPrime(String),
    /// Residue fields are only realized for primes of degree at most one in f.
    UnsupportedResiduePrime(String),
    /// A constant outside the rational-times-root-of-unity class reached a
    /// power test.
    UnsupportedConstantForPowerTest(String),
    /// Group enumeration exceeded the configured bound.
    GroupTooLarge { bound: usize },
    /// The supplied elements do not form a subgroup of the ambient group.
    NotASubgroup,
    /// Decomposition requested for a subgroup that is not abelian of rank
    /// at most two.
    NotRankTwoAbelian,
    /// Elements of distinct algebra instances were combined.
    AlgebraMismatch,
    /// A metacyclic descriptor violated gcd(i, e) = 1 or i^m = 1 (mod e).
    InvalidDescriptor(String),
    /// Witness construction requires every Sylow subgroup abelian of rank
    /// at most two.
    NotAdmissible(String),
    /// A ramification predicate needs the division criterion certified first.
    UncertifiedSpec,
    /// The tame-symbol residue failed the unit check (internal inconsistency).
    TameSymbolUndefined(String),
    /// An internal witness check that should always succeed came out false.
    InternalCheckFailed(String),
    /// Text or JSON input could not be parsed.
    Parse(String),
    /// An operation received arguments violating its contract.
    InvalidInput(String),
    /// A certificate does not match the group input it is verified against.
    CertificateMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ValuationOfZero => write!(f, "valuation of zero"),
            Error::NotAUnitAtPrime(p) => write!(f, "not a unit at prime {p}"),
            Error::UnsupportedResiduePrime(p) => {
                write!(
                    f,
                    "residue field not realized for prime {p} (degree in f exceeds 1)"
                )
            }
            Error::UnsupportedConstantForPowerTest(c) => {
                write!(f, "unsupported constant for power test: {c}")
            }
            Error::GroupTooLarge { bound } => {
                write!(f, "group too large for enumeration (bound {bound})")
            }
            Error::NotASubgroup => write!(f, "not a subgroup"),
            Error::NotRankTwoAbelian => write!(f, "not rank <= 2 abelian"),
            Error::AlgebraMismatch => write!(f, "elements belong to different algebra instances"),
            Error::InvalidDescriptor(msg) => write!(f, "invalid metacyclic descriptor: {msg}"),
            Error::NotAdmissible(msg) => write!(f, "group is not admissible: {msg}"),
            Error::UncertifiedSpec => {
                write!(
                    f,
                    "period unknown for non-certified spec (division criterion not certified)"
                )
            }
            Error::TameSymbolUndefined(msg) => write!(f, "tame symbol undefined: {msg}"),
            Error::InternalCheckFailed(msg) => write!(f, "internal check failed: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::CertificateMismatch(msg) => write!(f, "certificate mismatch: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
