use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable count {0} is outside 1..=16")]
    VariableCount(usize),

    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("exponent overflow: exponents are capped at 255")]
    ExponentOverflow,

    #[error("variable index {index} is out of range for {n} variables")]
    VariableIndex { index: usize, n: usize },

    #[error("ideals live in different rings ({left} vs {right} variables)")]
    AmbientMismatch { left: usize, right: usize },

    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    #[error("generator {0} involves the last variable")]
    InvolvesLastVariable(String),

    #[error("module is not of finite length: {0}")]
    NotFiniteLength(String),

    #[error("ideal is not weakly stable: {0}")]
    NotWeaklyStable(String),

    #[error("the ideal must be proper")]
    NotProper,

    #[error("the ideal must be nonzero")]
    ZeroIdeal,

    #[error("too many generators: {found} exceeds the cap of {cap}")]
    TooManyGenerators { found: usize, cap: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("window instability: {0}")]
    WindowInstability(String),

    #[error("window [{d_min}, {d_max}] is too small for {n} variables")]
    WindowTooSmall { d_min: i32, d_max: i32, n: usize },

    #[error("action matrices do not commute: {0}")]
    NonCommutingActions(String),

    #[error("invalid field characteristic {0}: expected 0 or a prime below 2^31")]
    InvalidField(u64),

    #[error("malformed complex: {0}")]
    MalformedComplex(String),

    #[error("resolution did not terminate within {0} steps")]
    ResolutionDepth(usize),

    #[error("Tor symmetry check failed: {0}")]
    SymmetryMismatch(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
