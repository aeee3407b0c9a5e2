use thiserror::Error;

/// Errors raised by field construction, cyclotomic computations, and counting.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{m} exceeds the configured bound {bound}")]
    FieldTooLarge { p: u64, m: u32, bound: u64 },
    #[error("modulus must be monic of degree {expected} with coefficients below p")]
    BadModulus { expected: u32 },
    #[error("modulus is reducible over F_p")]
    ModulusNotIrreducible,
    #[error("{value} is not a canonical element encoding for a field of size {q}")]
    FieldMismatch { value: u64, q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no index")]
    ZeroHasNoIndex,
    #[error("element {0} does not lie in the prime subfield")]
    NotInPrimeSubfield(u64),
    #[error("element {0} does not generate the multiplicative group")]
    NotAGenerator(u64),
    #[error("linear congruence coefficients must be nonzero")]
    ZeroCoefficient,
    #[error("congruence modulus must be at least 2")]
    BadCongruenceModulus,
    #[error("gcd {d} does not divide {b}")]
    NotDivisible { d: i64, b: i64 },
    #[error("q = {q} is not congruent to {residue} mod {modulus}")]
    WrongResidueClass { q: u64, residue: u64, modulus: u64 },
    #[error("no unique normalized decomposition q = s^2 + 4t^2 for q = {q} ({candidates} candidates)")]
    Decomposition { q: u64, candidates: usize },
    #[error("order {k} does not divide q - 1 = {q_minus_1}")]
    BadOrder { k: u64, q_minus_1: u64 },
    #[error("{what}: numerator {numerator} is not divisible by {divisor}")]
    NonIntegral {
        what: String,
        numerator: i128,
        divisor: i128,
    },
    #[error("estimated cost {cost} exceeds the bound {bound}")]
    TooLarge { cost: f64, bound: f64 },
    #[error("right-hand side must be nonzero for this formula")]
    ZeroRhs,
    #[error("y = {0} is zero or a fourth power")]
    QuarticY(u64),
    #[error("number of variables {n} out of range {min}..={max}")]
    BadArity { n: usize, min: usize, max: usize },
    #[error("denominator must have constant term 1")]
    BadDenominator,
    #[error("residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },
    #[error("reconstructed value {value} is {distance:.3e} from the nearest integer (tolerance {tolerance:.3e})")]
    NotNearInteger {
        value: f64,
        distance: f64,
        tolerance: f64,
    },
    #[error("independent routes disagree: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
