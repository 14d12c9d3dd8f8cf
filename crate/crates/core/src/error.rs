use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("modulus degree does not match the requested extension degree")]
    DegreeMismatch,
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("every nonzero element is an {0}-th power")]
    AllElementsArePowers(u64),
    #[error("result is indistinguishable from zero at the available precision")]
    PrecisionExhausted,
    #[error("approximation does not satisfy the Hensel hypothesis")]
    HenselHypothesisFails,
    #[error("input approximation carries too few digits")]
    InsufficientInputPrecision,
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("residual characteristic two (use the Q_2 square classes)")]
    ResidualCharTwo,
    #[error("wildly ramified case: {0}")]
    WildCase(String),
    #[error("not a field extension: {0}")]
    NotAFieldExtension(String),
    #[error("base field lacks the required roots of unity")]
    MissingRootsOfUnity,
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("element lies in the base field (algebra is not proper)")]
    NotProper,
    #[error("norm test inconclusive: {0}")]
    NormTestInconclusive(String),
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
