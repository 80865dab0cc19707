//! Joint ranking of papers and institutions on a heterogeneous
//! institution-citation network.
//!
//! The pipeline runs in four stages, each in its own module:
//!
//! * [`ingest`] parses bibliographic records, reduces affiliations to
//!   canonical first-level institutions and slices the corpus by year.
//! * [`network`] builds the paper/institution graph plus the two baseline
//!   graphs (paper citations only, institution-to-institution projection)
//!   and turns any of them into a row-stochastic operator.
//! * [`solver`] runs damped power iteration and produces ranking tables.
//! * [`eval`] compares rankings (Spearman over top-N) and scores them
//!   against ground-truth sets (recall@N, precision@N).
//!
//! ```
//! use iprank::prelude::*;
//!
//! let input = "P1\t1995-01-01\tI1;X|I2\tP2,P3\n\
//!              P2\t1994-03-02\tI2|I3\t\n\
//!              P3\t1990-07-09\tI4\t\n";
//! let filtered = ingest_records(input.as_bytes(), &AliasTable::new()).unwrap();
//! let corpus = Corpus::new(filtered.records, filtered.registry);
//! let slice = corpus.slice(TimeWindow::new(1990, 1995).unwrap());
//! let graph = build_hetero_graph(&slice).unwrap();
//! let scores = pagerank(&graph.transition_operator(), &SolverConfig::default()).unwrap();
//! let (papers, institutions) = split_scores(&scores, &graph).unwrap();
//! let table = rank(&institutions, Method::IPRank);
//! assert_eq!(table.rows[0].id, "I4");
//! # let _ = papers;
//! ```

pub mod cli;
pub mod error;
pub mod eval;
pub mod ingest;
pub mod network;
pub mod solver;
pub mod synth;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::eval::{
        compare_report, precision_at_n, rank_lookup, recall_at_n, spearman_top_n, EvalReport,
        GroundTruthSet, Metric,
    };
    pub use crate::ingest::{
        apply_filters, corpus_stats, ingest_records, normalize_institution, parse_records,
        AliasTable, BibRecord, CleanRecord, Corpus, CorpusSlice, FilterReport, StatsSummary,
        TimeWindow,
    };
    pub use crate::network::{
        build_citation_graph, build_hetero_graph, project_institution_graph, CitationGraph,
        ClassWeights, EdgeClass, HeteroGraph, InstitutionGraph, StochasticOperator,
    };
    pub use crate::solver::{
        citation_scores, institution_scores, merge_institution_scores, pagerank, rank, split_scores,
        EntityClass, EntityScores,
        MergeMap, Method, RankingTable, ScoreVector, SolverConfig,
    };
}
