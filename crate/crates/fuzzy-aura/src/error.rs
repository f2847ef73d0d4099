use thiserror::Error;

/// Errors produced by space construction, operators, and the decision pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("universe mismatch: expected {expected:?}, got {got:?}")]
    UniverseMismatch { expected: Vec<String>, got: Vec<String> },

    #[error("empty universe")]
    EmptyUniverse,

    #[error("duplicate point identifier `{0}`")]
    DuplicatePoint(String),

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("grade {0} outside [0,1]")]
    GradeOutOfRange(f64),

    #[error("grade vector has length {got}, universe has {expected} points")]
    GradeLengthMismatch { expected: usize, got: usize },

    #[error("empty fuzzy set family")]
    EmptyFamily,

    #[error("topology axioms violated: {0}")]
    TopologyViolation(String),

    #[error("topology generation exceeded {0} members")]
    GenerationOverflow(usize),

    #[error("scope diagonal: a({point})({point}) = {value}, must be exactly 1")]
    ScopeDiagonal { point: String, value: f64 },

    #[error("strict mode: aura of `{0}` is not a member of the topology")]
    AuraNotOpen(String),

    #[error("discrete topology cannot be enumerated here: {0}")]
    DiscreteUnenumerable(&'static str),

    #[error("iterated closure did not reach a fixpoint within {0} steps")]
    FixpointNotReached(usize),

    #[error("point map is not total: `{0}` has no image")]
    PartialMap(String),

    #[error("relation diagonal R({0},{0}) = {1}, must be 1")]
    NonReflexiveRelation(String, f64),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("criterion weights sum to {0}, must sum to 1")]
    WeightSum(f64),

    #[error("alpha {0} outside [0,1]")]
    AlphaOutOfRange(f64),

    #[error("decision matrix has {got} columns at row {row}, expected {expected}")]
    MatrixShape { row: usize, expected: usize, got: usize },

    #[error("decision class `{name}` has {got} grades, expected {expected}")]
    ClassShape { name: String, expected: usize, got: usize },

    #[error("no decision classes")]
    NoClasses,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
