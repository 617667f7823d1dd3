use thiserror::Error;

/// Errors raised by the algebra, curve and bound routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field of characteristic {p} and degree {k} is not supported")]
    DegreeUnsupported { p: u64, k: usize },
    #[error("modulus is not a monic irreducible polynomial of the declared degree")]
    InvalidModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element is not a square")]
    NotASquare,
    #[error("F_{sub} is not a subfield of F_{ext}")]
    NotASubfield { sub: u64, ext: u64 },
    #[error("no root of the subfield modulus found in the extension")]
    NoRootFound,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("monomial {0:?} does not have the declared degree")]
    InhomogeneousInput((u32, u32, u32)),
    #[error("the point (0:0:0) is not a projective point")]
    ZeroPoint,
    #[error("division by the zero form")]
    ZeroDivisor,
    #[error("determinant entries do not give a homogeneous result")]
    InhomogeneousDeterminant,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("field with {0} elements is too large for this operation")]
    FieldTooLarge(u64),
    #[error("curve contains a line; fast counting requires a line-free quartic")]
    LineOnCurve,
    #[error("resultant elimination degenerate after {0} coordinate changes")]
    DegenerateAfterRetries(usize),
    #[error("model does not define a genus-3 hyperelliptic curve: {0}")]
    NotGenus3(&'static str),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("point counts are inconsistent with a genus-3 zeta function: {0}")]
    InconsistentCounts(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("expected a nonzero form of degree 4, got degree {0}")]
    NotAQuartic(u32),
    #[error("family member is the zero form")]
    ZeroForm,
    #[error("lambda(lambda-1)(a^2 lambda-4b) is not a nonzero square")]
    ConditionNotSquare,
    #[error("an elliptic factor is singular")]
    SingularEllipticFactor,
    #[error("construction requires odd characteristic")]
    CharacteristicTwo,
    #[error("elliptic model is singular")]
    SingularModel,
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("family {family} expects {expected} parameters, got {got}")]
    WrongArity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
