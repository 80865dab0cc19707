//! Ranking evaluation: rank correlation between methods and retrieval of
//! ground-truth entities.

mod metrics;
mod report;
mod truth;

pub use metrics::{average_ranks, precision_at_n, rank_lookup, recall_at_n, spearman_top_n};
pub use report::{compare_report, ranking_labels, EvalReport, EvalRow, Metric};
pub use truth::GroundTruthSet;
