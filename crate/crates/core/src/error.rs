use thiserror::Error;

/// Errors raised by algebra construction, evaluation and file I/O.
///
/// Every variant maps to a short stable code through [`Error::code`], which is
/// what the CLI prints and what the tests match on.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("algebra carries no conjugation")]
    NoInvolution,
    #[error("conjugation is not an involutive anti-automorphism: {0}")]
    BadInvolution(String),
    #[error("map is not a morphism of the algebra: {0}")]
    NotMorphism(String),
    #[error("algebra is not multiplicative")]
    NotMultiplicative,
    #[error("quadruple does not generate the algebra ({reached} of {dim} basis vectors reached)")]
    NotGenerating { reached: usize, dim: usize },
    #[error("quadruple extension assigns conflicting images to e{0}")]
    Inconsistent(usize),
    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("map is not a unit- and conjugation-preserving octonion automorphism: {0}")]
    BadAutomorphism(String),
    #[error("invalid basic quadruple: {0}")]
    BadQuadruple(String),
    #[error("table is not monomial at e{0}*e{1}")]
    NotMonomial(usize, usize),
    #[error("Hom-power of order 0 is undefined")]
    UndefinedPower,
    #[error("power indices must be positive")]
    ZeroIndex,
    #[error("deterministic polarization of degree {degree} over dimension {dim} exceeds the tuple cap {cap}")]
    DegreeCap { degree: usize, dim: usize, cap: usize },
    #[error("zero denominator in rational {0:?}")]
    ZeroDenominator(String),
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid algebra file: {0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension { .. } | Error::IndexOutOfRange { .. } => "dimension",
            Error::NoInvolution => "no-involution",
            Error::BadInvolution(_) => "bad-involution",
            Error::NotMorphism(_) => "not-morphism",
            Error::NotMultiplicative => "not-multiplicative",
            Error::NotGenerating { .. } => "not-generating",
            Error::Inconsistent(_) => "inconsistent",
            Error::NotAutomorphism(_) => "not-automorphism",
            Error::BadAutomorphism(_) => "bad-automorphism",
            Error::BadQuadruple(_) => "bad-quadruple",
            Error::NotMonomial(..) => "not-monomial",
            Error::UndefinedPower => "undefined-power",
            Error::ZeroIndex => "zero-index",
            Error::DegreeCap { .. } => "degree-cap",
            Error::ZeroDenominator(_) => "zero-denominator",
            Error::BadRational(_) => "bad-rational",
            Error::Parse { .. } => "parse",
            Error::Invalid(_) => "invalid",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
