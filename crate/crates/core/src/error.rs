use thiserror::Error;

pub type Result<T> = std::result::Result<T, MonoidError>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MonoidError {
    #[error("gcd undefined: both inputs are zero")]
    GcdUndefined,
    #[error("zero polynomial passed to {0}")]
    ZeroPolynomial(&'static str),
    #[error("polynomial is not squarefree; decompose it first")]
    NotSquarefree,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not homogeneous (degrees {0} and {1})")]
    Inhomogeneous(u32, u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is zero")]
    ZeroPart(&'static str),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("common factor {0}: the monoid is reducible")]
    CommonFactor(String),
    #[error("common singular point {0} of the tangent cone and the curve at infinity: the line through it is singular")]
    CommonSingularPoint(String),
    #[error("not a monoid: {0}")]
    NotAMonoid(String),
    #[error("point {0} is a base point")]
    BasePoint(String),
    #[error("point {0} is not a base point")]
    NotABasePoint(String),
    #[error("cannot project the monoid point from itself")]
    CannotProjectApex,

    #[error("pullback is identically zero: the parameterized curve is a component")]
    IdenticallyZero,
    #[error("no generic projection found after {tries} shears: {detail}")]
    GenericityFailure { tries: usize, detail: String },
    #[error("projection is degenerate")]
    DegenerateProjection,
    #[error("curves share a component through {0}")]
    CommonFactorThroughP(String),
    #[error("local quotient did not stabilize below truncation order {0}")]
    NoStabilization(usize),
    #[error("point {0} is not a common zero")]
    NotACommonZero(String),

    #[error("Hessian degenerate at {0}")]
    HessianDegenerate(String),
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not a cubic: {0}")]
    NotACubic(String),
    #[error("point {0} is not singular on the curve")]
    NotSingularPoint(String),
    #[error("singular line detected: {0}")]
    SingularLineDetected(String),
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),
    #[error("ledger mismatch: {0}")]
    LedgerMismatch(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("condition unsatisfiable: {0}")]
    ConditionUnsatisfiable(String),
    #[error("specification ledger mismatch: {0}")]
    SpecLedgerMismatch(String),
    #[error("round trip mismatch: {0}")]
    RoundTripMismatch(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

impl MonoidError {
    /// Internal inconsistencies that must never fire on correct input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            MonoidError::LedgerMismatch(_)
                | MonoidError::RoundTripMismatch(_)
                | MonoidError::HessianDegenerate(_)
                | MonoidError::ConstraintViolation(_)
                | MonoidError::NoStabilization(_)
                | MonoidError::GenericityFailure { .. }
        )
    }

    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            MonoidError::GcdUndefined => "GcdUndefined",
            MonoidError::ZeroPolynomial(_) => "ZeroPolynomial",
            MonoidError::NotSquarefree => "NotSquarefree",
            MonoidError::Syntax { .. } => "SyntaxError",
            MonoidError::UnknownVariable(_) => "UnknownVariable",
            MonoidError::Inhomogeneous(..) => "Inhomogeneous",
            MonoidError::DimensionMismatch { .. } => "DimensionMismatch",
            MonoidError::ZeroPart(_) => "ZeroPart",
            MonoidError::DegreeMismatch(_) => "DegreeMismatch",
            MonoidError::CommonFactor(_) => "CommonFactor",
            MonoidError::CommonSingularPoint(_) => "CommonSingularPoint",
            MonoidError::NotAMonoid(_) => "NotAMonoid",
            MonoidError::BasePoint(_) => "BasePoint",
            MonoidError::NotABasePoint(_) => "NotABasePoint",
            MonoidError::CannotProjectApex => "CannotProjectApex",
            MonoidError::IdenticallyZero => "IdenticallyZero",
            MonoidError::GenericityFailure { .. } => "GenericityFailure",
            MonoidError::DegenerateProjection => "DegenerateProjection",
            MonoidError::CommonFactorThroughP(_) => "CommonFactorThroughP",
            MonoidError::NoStabilization(_) => "NoStabilization",
            MonoidError::NotACommonZero(_) => "NotACommonZero",
            MonoidError::HessianDegenerate(_) => "HessianDegenerate",
            MonoidError::Precondition(_) => "Precondition",
            MonoidError::NotACubic(_) => "NotACubic",
            MonoidError::NotSingularPoint(_) => "NotSingularPoint",
            MonoidError::SingularLineDetected(_) => "SingularLineDetected",
            MonoidError::ConstraintViolation(_) => "ConstraintViolation",
            MonoidError::LedgerMismatch(_) => "LedgerMismatch",
            MonoidError::Unsupported(_) => "Unsupported",
            MonoidError::ConditionUnsatisfiable(_) => "ConditionUnsatisfiable",
            MonoidError::SpecLedgerMismatch(_) => "SpecLedgerMismatch",
            MonoidError::RoundTripMismatch(_) => "RoundTripMismatch",
            MonoidError::ConstructionFailed(_) => "ConstructionFailed",
        }
    }
}
