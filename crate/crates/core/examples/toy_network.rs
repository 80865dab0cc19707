//! Three papers, four institutions: build the heterogeneous graph, solve,
//! and print both rankings.
//!
//! ```text
//! cargo run --example toy_network
//! ```

use iprank::prelude::*;

const RECORDS: &str = include_str!("../data/toy_records.tsv");

fn main() -> iprank::Result<()> {
    let filtered = ingest_records(RECORDS.as_bytes(), &AliasTable::new())?;
    let corpus = Corpus::new(filtered.records, filtered.registry);
    let slice = corpus.slice(corpus.year_range().expect("toy corpus is not empty"));
    let graph = build_hetero_graph(&slice)?;

    println!("{} nodes, {} edges", graph.node_count(), graph.edge_count());
    for (u, v, class) in graph.edges() {
        println!("  {:>2} -> {:<2} {class}", graph.label(u as usize), graph.label(v as usize));
    }

    let scores = pagerank(&graph.transition_operator(), &SolverConfig::default())?;
    println!("converged in {} iterations (residual {:.1e})", scores.iterations_used, scores.final_residual);

    let (papers, institutions) = split_scores(&scores, &graph)?;
    for table in [rank(&papers, Method::IPRank), rank(&institutions, Method::IPRank)] {
        println!("\n{} ranking", table.class);
        for row in &table.rows {
            println!("{:>3}  {:<4} {:.6}", row.rank, row.id, row.score);
        }
    }
    Ok(())
}
