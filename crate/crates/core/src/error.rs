use alloc::string::String;
use core::fmt;

/// Errors raised by the exact-arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotAUnit(i64),
    NotReal,
    ZeroPolynomial,
    DivisionByZero,
    UnsupportedRelation(String),
    IncompatibleExponents,
    FractionalExponent,
    PrecisionExhausted,
    NonInvertibleGenerator,
    UnsupportedOrder(usize),
    InconsistentCycleTypes,
    NonIntegralGenus,
    NormalizingLift(String),
    NoRelation,
    AmbiguousRelation(usize),
    DimensionMismatch { expected: usize, found: usize },
    SingularCurve,
    NonIntegralModel,
    BadReduction(u64),
    Factorization,
    ZeroArgument,
    Inconsistent(String),
    ImprimitiveParams(i64, i64),
    EmptyProduct,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAUnit(k) => write!(f, "{k} is not a unit mod 9"),
            Error::NotReal => write!(f, "element is not fixed by complex conjugation"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::UnsupportedRelation(s) => write!(f, "relation not of supported shape: {s}"),
            Error::IncompatibleExponents => write!(f, "series exponents differ by a non-integer"),
            Error::FractionalExponent => write!(f, "product has a fractional q9-exponent"),
            Error::PrecisionExhausted => write!(f, "series precision exhausted"),
            Error::NonInvertibleGenerator => write!(f, "generator is not invertible"),
            Error::UnsupportedOrder(n) => write!(f, "element order {n} unsupported"),
            Error::InconsistentCycleTypes => write!(f, "cycle types do not partition the degree"),
            Error::NonIntegralGenus => write!(f, "Riemann-Hurwitz gives a non-integral genus"),
            Error::NormalizingLift(s) => write!(f, "normalizing lift: {s}"),
            Error::ImprimitiveParams(a, b) => write!(f, "({a},{b}) is divisible by 3"),
            Error::EmptyProduct => write!(f, "unit product has no factors or a zero multiplicity"),
            Error::NoRelation => write!(f, "no relation found"),
            Error::AmbiguousRelation(d) => write!(f, "relation space has dimension {d}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected dimension {expected}, found {found}")
            }
            Error::SingularCurve => write!(f, "singular curve"),
            Error::NonIntegralModel => write!(f, "model is not integral"),
            Error::BadReduction(p) => write!(f, "bad reduction at {p}"),
            Error::Factorization => write!(f, "could not factor discriminant"),
            Error::ZeroArgument => write!(f, "argument is zero"),
            Error::Inconsistent(s) => write!(f, "inconsistent system: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
