use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("vertex set of order {set} does not match graph order {graph}")]
    OrderMismatch { set: usize, graph: usize },

    #[error("k = {k} outside the admissible range [{lo}, {hi}]")]
    KOutOfRange { k: i64, lo: i64, hi: i64 },

    #[error("graph has no edges")]
    Edgeless,

    #[error("τ-domination requires δ>0 (graph has an isolated vertex)")]
    IsolatedVertex,

    #[error("τ = {0} is outside (0, 1]")]
    InvalidTau(String),

    #[error("r = {0} must be nonnegative")]
    NegativeR(i64),

    #[error("oracle cap exceeded: n = {n} > cap = {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("no closed form for {family} with k = {k}")]
    NoClosedForm { family: &'static str, k: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("bound not applicable: {0}")]
    Inapplicable(String),

    #[error("set is not of the form S × V₂: {0}")]
    ShapeViolation(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported by solver `{solver}`: {what}")]
    Unsupported { solver: &'static str, what: String },

    /// A constructed object failed its own post-condition check. Signals a bug
    /// (or a false theorem), never bad input.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}
