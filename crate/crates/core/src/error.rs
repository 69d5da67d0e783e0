use thiserror::Error;

/// Errors for violated preconditions across the crate.
///
/// Every variant names the offending value so callers (and the CLI) can print
/// a structured message like `p = 7 divides c*sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime must exceed 3, got {0}")]
    PrimeTooSmall(u64),
    #[error("prime {0} is outside the supported range (p < 2^62)")]
    PrimeTooLarge(u64),
    #[error("p = {p} divides the denominator {u}")]
    DenominatorDivisible { p: u64, u: i64 },
    #[error("p = {p} divides the numerator {v}")]
    NumeratorDivisible { p: u64, v: i64 },
    #[error("p = {p} divides the parameter {s}")]
    SDivisible { p: u64, s: i64 },
    #[error("p = {p} divides {what}")]
    BadFormModulus { p: u64, what: &'static str },
    #[error("j = {j} is outside [2, p-1] for p = {p}")]
    JOutOfRange { j: u64, p: u64 },
    #[error("shifts {a} and {b} are congruent mod p = {p}")]
    DuplicateShift { a: i64, b: i64, p: u64 },
    #[error("shift list must be nonempty")]
    EmptyShiftList,
    #[error("m = {m} makes a transformed shift collide with 0 or 1 mod p = {p}")]
    DegenerateShift { m: i64, p: u64 },
    #[error("interval index r = {r} is outside [1, n] for n = {n}")]
    BadIntervalIndex { r: u64, n: u64 },
    #[error("subdivision count n = {n} must satisfy 1 <= n < p = {p}")]
    BadSubdivision { n: u64, p: u64 },
    #[error("fraction {num}/{den} is not in [0, 1] (or den = 0)")]
    BadFraction { num: u64, den: u64 },
    #[error("endpoints must satisfy lo < hi")]
    EmptyInterval,
    #[error("{0} is not a valid discriminant (need D < 0 and D = 0 or 1 mod 4)")]
    BadDiscriminant(i64),
    #[error("p = {p} = {got} (mod 4), expected p = {want} (mod 4)")]
    WrongResidueClass { p: u64, want: u8, got: u8 },
    #[error("the zero form (0,0,0) is not allowed")]
    ZeroForm,
    #[error("form coefficients overflow i64")]
    CoefficientOverflow,
    #[error("linear-form coefficient of j must be +1 or -1, got {0}")]
    BadEps(i64),
    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),
    #[error("{0}")]
    Usage(String),
    #[error("empty prime range {lo}..{hi}")]
    EmptyRange { lo: u64, hi: u64 },
    #[error("audit modulus must be at least 2, got {0}")]
    BadModulus(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
