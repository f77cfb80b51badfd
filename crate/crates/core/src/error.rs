use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table mismatch at {entry}: expected {expected}, computed {computed}")]
    TableMismatch {
        entry: String,
        expected: String,
        computed: String,
    },
    #[error("matrix block A has nonzero trace {0}")]
    NonTraceless(String),
    #[error("matrix commutator left the image of rho")]
    ClosureViolation,
    #[error("element is not nilpotent (seventh power nonzero)")]
    NotNilpotent,
    #[error("root decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("subspace not closed under bracket: {0}")]
    NotClosed(String),
    #[error("no rational scaling solves {0}")]
    NoSolution(String),
    #[error("spectrum mismatch for {operator} on {vector}")]
    SpectrumMismatch { operator: String, vector: String },
    #[error("relation failed: {0}")]
    RelationFailure(String),
    #[error("plane mismatch: {0}")]
    PlaneMismatch(String),
    #[error("quaternion norm is {0}, expected 1")]
    NotUnit(String),
    #[error("not a rolling configuration: {0}")]
    InvalidState(String),
    #[error("moving frame degenerates at x = +-e3")]
    DegeneratePoint,
    #[error("vector is not null: <x,x> = {0}")]
    NotNull(String),
    #[error("representative not normalized: |v|^2 = {v}, |h|^2 = {h}")]
    NotNormalized { v: String, h: String },
    #[error("identity failed: {0}")]
    IdentityFailure(String),
    #[error("bad parameters: a.b = {0}, expected -1")]
    BadParameters(String),
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
