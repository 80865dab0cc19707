//! Write the heterogeneous graph of the sample records as an edge list,
//! read it back, and solve from the file alone.
//!
//! ```text
//! cargo run --example export_edge_list -- graph.tsv
//! ```

use std::fs::File;
use std::io::{BufReader, BufWriter};

use iprank::network::EdgeList;
use iprank::prelude::*;

const RECORDS: &str = include_str!("../data/sample_records.tsv");
const ALIASES: &str = include_str!("../data/aliases.tsv");

fn main() -> anyhow::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "graph.tsv".into());
    let aliases = AliasTable::from_reader(ALIASES.as_bytes())?;
    let filtered = ingest_records(RECORDS.as_bytes(), &aliases)?;
    let corpus = Corpus::new(filtered.records, filtered.registry);
    let slice = corpus.slice(TimeWindow::new(1994, 1998)?);
    let graph = build_hetero_graph(&slice)?;

    graph.to_edge_list().write_to(BufWriter::new(File::create(&path)?))?;
    let list = EdgeList::read_from(BufReader::new(File::open(&path)?))?;
    println!("{path}: {} papers, {} institutions, {} edges", list.n_papers, list.n_institutions, list.edges.len());

    let from_file = pagerank(&list.transition_operator(), &SolverConfig::default())?;
    let direct = pagerank(&graph.transition_operator(), &SolverConfig::default())?;
    assert_eq!(from_file.scores, direct.scores);
    for (node, score) in from_file.scores.iter().enumerate() {
        println!("{:>3} {:<40} {score:.5}", node, graph.label(node));
    }
    Ok(())
}
