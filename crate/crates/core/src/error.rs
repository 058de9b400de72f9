use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} characters, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("bad character {ch:?} at position {pos}")]
    BadCharacter { ch: char, pos: usize },
    #[error("arity mismatch for `{name}`: got {got}, want {want}")]
    ArityMismatch {
        name: String,
        got: usize,
        want: usize,
    },
    #[error("degree bound must be at least 2, got {0}")]
    DegreeBoundTooSmall(usize),
    #[error("threshold {k} out of range for arity {n}")]
    BadThreshold { n: u32, k: u32 },
    #[error("arity {got} exceeds the configured maximum {max}")]
    ArityOverflow { got: u32, max: u32 },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("`{0}` is referenced before it is defined")]
    ForwardReference(String),
    #[error("circuit has no output line")]
    MissingOutput,
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("assignment does not cover variable x{0}")]
    MissingVariable(u32),
    #[error("DIMACS header mismatch: {0}")]
    HeaderMismatch(String),
    #[error("literal {lit} out of range for {vars} variables")]
    LiteralOutOfRange { lit: i64, vars: u32 },
    #[error("empty clause")]
    EmptyClause,
    #[error("{0} is not a solution")]
    NotASolution(String),
    #[error("solution set too large for export ({0} vertices)")]
    TooLarge(usize),
    #[error("cannot sample {size} distinct words from dimension {n}")]
    SizeOverflow { n: u32, size: usize },
    #[error("base is not in the required class: {0}")]
    WrongClass(String),
    #[error("base function `{0}` is not affine")]
    NonAffineBaseFunction(String),
    #[error("formula is not 1-reproducing")]
    NotOneReproducing,
    #[error("target is not realizable over the base at arity {0}")]
    NotRealizable(u32),
    #[error("k = {0} is too large (maximum 14)")]
    KTooLarge(u32),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
