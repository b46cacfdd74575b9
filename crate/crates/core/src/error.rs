use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different variable contexts")]
    ContextMismatch,

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidName(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("too many odd variables ({0}, at most {max})", max = crate::superalgebra::MAX_ODD_VARS)]
    TooManyOddVariables(usize),

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("`{0}` is not an even variable")]
    NotEven(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation acts on {got} points but the tensor power has g = {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("expected {expected} coefficient pairs, found {found}")]
    CoefficientCount { expected: usize, found: usize },

    #[error("element is not invariant under the symmetric group")]
    NotInvariant,

    #[error("divisors have different base algebras or ambient coordinates")]
    BaseMismatch,

    #[error("not a monic polynomial in `{0}` with coefficients of the form a + theta*b")]
    NotNormalForm(String),

    #[error("multiplier must be even")]
    OddMultiplier,

    #[error("unit of a spin structure must be nonzero")]
    ZeroUnit,

    #[error("no certified witness found up to degree {0}")]
    NotFound(u32),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
