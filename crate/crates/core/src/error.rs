use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error("p must be odd, got {0}")]
    EvenParameter(String),
    #[error("p must be at least 3, got {0}")]
    ParameterTooSmall(String),
    #[error("p = {p} exceeds the materialization limit {limit}")]
    MaterializationLimit { p: String, limit: u64 },
    #[error("polynomial is not normalized (needs Δ(1/t) = Δ(t) and Δ(1) = 1): {0}")]
    NotNormalized(String),
    #[error("polynomial is not symmetric under t -> 1/t: {0}")]
    Asymmetric(String),
    #[error("symmetrization has non-integral coefficients")]
    NonIntegralSymmetrization,
    #[error("coefficient denominators must divide 2")]
    NotHalfIntegral,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("circle roots are not simple: {0}")]
    NonSimpleCircleRoots(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),
    #[error("parameters must be strictly increasing: {0}")]
    NotIncreasing(String),
    #[error("no full arc of p = {p} with sign {sign} fits inside the current interval (spacing precondition violated at position {index})")]
    WitnessSpacing { index: usize, p: String, sign: i8 },
    #[error("sequence index must be at least 1")]
    SequenceIndex,
    #[error("the root vertex has no parent edge")]
    RootHasNoEdge,
    #[error("child index {index} is out of range for arity {arity}")]
    ChildIndex { index: u32, arity: u32 },
    #[error("arity must be at least 2, got {0}")]
    Arity(u32),
    #[error("path must be nonempty")]
    EmptyPath,
    #[error("path endpoint {0} is in the forbidden set")]
    EndpointForbidden(String),
    #[error("cannot certify {entry} != {forbidden}")]
    Uncertified { entry: String, forbidden: String },
    #[error("undecided: {0}")]
    Undecided(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
