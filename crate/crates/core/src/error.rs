//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge endpoint {vertex} out of range (n = {n})")]
    EndpointOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} rejected")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("weight for vertex {vertex} must be finite and >= 0, got {weight}")]
    BadWeight { vertex: usize, weight: f64 },

    #[error("expected {expected} weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("BFS source set must be non-empty")]
    EmptySource,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("instance is invalid: {0}")]
    BadInstance(String),

    #[error("empty point list")]
    EmptyPointList,

    #[error("coloring is not a proper 2-coloring: monochromatic edge ({0}, {1})")]
    ImproperColoring(usize, usize),

    #[error("negative weight {weight} on vertex {vertex}")]
    NegativeWeight { vertex: usize, weight: f64 },

    #[error("parameter out of range: {0}")]
    BadParameter(String),

    #[error("sample size {s} exceeds vertex count {n}")]
    SampleTooLarge { s: usize, n: usize },

    #[error("wrong branch: odd girth {g} is not above the short-cycle bound {c}")]
    WrongBranch { g: usize, c: f64 },

    #[error("refused: {0}")]
    Refusal(String),

    #[error("class assumption violated: {0}")]
    AssumptionViolated(String),

    #[error("unequal radii (max deviation {0}); pass force=true to run anyway")]
    UnequalRadii(f64),

    #[error("oracle budget exceeded: n = {n} > cap {cap}")]
    BudgetExceeded { n: usize, cap: usize },

    #[error("oracle time budget exceeded after {0:?}")]
    TimeBudgetExceeded(std::time::Duration),

    #[error("embedding construction infeasible: {0}")]
    ConstructionInfeasible(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
