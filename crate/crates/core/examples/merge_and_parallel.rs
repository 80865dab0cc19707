//! Merge institution scores after solving, and run the solver on a larger
//! synthetic graph with the sequential and the parallel kernel.

use std::time::Instant;

use iprank::prelude::*;
use iprank::synth::{generate_text, institution_name, SynthConfig};

fn main() -> iprank::Result<()> {
    let cfg = SynthConfig { n_papers: 50_000, n_institutions: 5_000, n_citations: 400_000, ..Default::default() };
    let filtered = ingest_records(generate_text(&cfg).as_bytes(), &AliasTable::new())?;
    let corpus = Corpus::new(filtered.records, filtered.registry);
    let slice = corpus.slice(corpus.year_range().expect("non-empty"));
    let graph = build_hetero_graph(&slice)?;
    let op = graph.transition_operator();

    let mut results = Vec::new();
    for parallel in [false, true] {
        let start = Instant::now();
        let pr = pagerank(&op, &SolverConfig { parallel, ..Default::default() })?;
        println!(
            "parallel={parallel:<5} {} iterations in {:.2?} (threads: {})",
            pr.iterations_used,
            start.elapsed(),
            rayon::current_num_threads()
        );
        results.push(pr);
    }
    let gap = results[0].scores.iter().zip(&results[1].scores).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("max difference between kernels: {gap:.1e}");

    // Fold the second institution into the first, as if they were one body.
    let (_, institutions) = split_scores(&results[0], &graph)?;
    let mut merge = MergeMap::new();
    merge.insert(institution_name(1), institution_name(0));
    let merged = merge_institution_scores(&institutions, &merge)?;
    println!(
        "{} + {} = {:.6}",
        institutions.get(&institution_name(0)).unwrap_or(0.0),
        institutions.get(&institution_name(1)).unwrap_or(0.0),
        merged.get(&institution_name(0)).unwrap_or(0.0)
    );
    for row in rank(&merged, Method::IPRank).top(5) {
        println!("{:>3} {:<18} {:.6}", row.rank, row.id, row.score);
    }
    Ok(())
}
