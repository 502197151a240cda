use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable {0} is not in the polynomial's variable list")]
    UnknownVariable(Var),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooSmall { target: u32, degree: u32 },
    #[error("singular substitution matrix")]
    SingularMatrix,
    #[error("bad prime {0}: a denominator or tracked leading coefficient vanishes")]
    BadPrime(u64),
    #[error("series is not a unit (constant term is zero)")]
    NotAUnit,
    #[error("series must have constant term 1")]
    NotNormalized,
    #[error("series is not reversible (needs c0 = 0 and c1 != 0)")]
    NotReversible,
    #[error("the two polynomials share a nonconstant common factor")]
    CommonComponent,
    #[error("shear certification failed after {0} attempts")]
    ShearExhausted(usize),
    #[error("point is not an isolated common zero")]
    NotIsolated,
    #[error("point is not a common zero")]
    NotAZero,
    #[error("intersection with the sphere is not finite")]
    InfiniteIntersection,
    #[error("curve germ is not reduced")]
    NonReduced,
    #[error("series truncation too short")]
    TruncationTooShort,
    #[error("genericity exhausted: {0}")]
    GenericityExhausted(String),
    #[error("discriminant degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("nondegeneracy at infinity failed: {0}")]
    NondegeneracyFailed(String),
    #[error("Jacobian curve is not reduced at the point")]
    NonReducedJacobian,
    #[error("point is not a cusp (index zero)")]
    NotACusp,
    #[error("independent draws disagree: {0}")]
    AgreementFailed(String),
    #[error("a counted point touches the polydisc boundary")]
    BoundaryContact,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
