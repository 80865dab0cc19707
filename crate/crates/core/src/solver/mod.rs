//! Power-iteration PageRank over stochastic operators and the ranking
//! tables built from its scores.

mod config;
mod power;
mod ranking;
mod scores;

pub use config::SolverConfig;
pub use power::{pagerank, pagerank_observed, ScoreVector};
pub use ranking::{rank, Method, RankRow, RankingMetadata, RankingTable};
pub use scores::{
    citation_scores, institution_scores, merge_institution_scores, split_scores, EntityClass,
    EntityScores, MergeMap,
};
