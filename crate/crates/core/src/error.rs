use std::io;

use crate::solver::EntityClass;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("institution name is empty")]
    EmptyInstitution,

    #[error("alias table line {line}: {message}")]
    AliasTable { line: usize, message: String },

    #[error("invalid time window {start}:{end}")]
    InvalidWindow { start: i32, end: i32 },

    #[error("clean corpus line {line}: {message}")]
    CorpusStore { line: usize, message: String },

    #[error("paper {0} has no affiliation edge")]
    UnaffiliatedPaper(String),

    #[error("graph invariant violated: {0}")]
    GraphInvariant(String),

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("cannot rank an empty graph")]
    EmptyGraph,

    #[error("power iteration did not converge after {iterations} iterations (L1 residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("score vector has {actual} entries but the graph has {expected} nodes")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("merge map is not idempotent: {0}")]
    ChainedMerge(String),

    #[error("rank correlation needs at least 2 entities, got {0}")]
    TooFewForCorrelation(usize),

    #[error("rank correlation is undefined for constant ranks")]
    ConstantRanks,

    #[error("cutoff {n} exceeds table length {len}")]
    CutoffExceedsTable { n: usize, len: usize },

    #[error("cutoff must be positive")]
    ZeroCutoff,

    #[error("ground truth set is empty")]
    EmptyTruth,

    #[error("entity class mismatch: {0} vs {1}")]
    ClassMismatch(EntityClass, EntityClass),

    #[error("cutoff list must be strictly increasing")]
    NonIncreasingCutoffs,

    #[error("ranking table line {line}: {message}")]
    RankingTable { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
