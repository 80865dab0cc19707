//! IPRank against the two single-class baselines: Spearman correlation of
//! the top-N institutions (IPRank vs IRank) and papers (IPRank vs
//! PageRank) for N = 10..100.

use iprank::prelude::*;
use iprank::synth::{generate_text, SynthConfig};

fn main() -> iprank::Result<()> {
    let cfg = SynthConfig { n_papers: 5_000, n_institutions: 600, n_citations: 40_000, ..Default::default() };
    let filtered = ingest_records(generate_text(&cfg).as_bytes(), &AliasTable::new())?;
    let corpus = Corpus::new(filtered.records, filtered.registry);
    let slice = corpus.slice(corpus.year_range().expect("non-empty"));
    let solver = SolverConfig::default();

    let hetero = build_hetero_graph(&slice)?;
    let (papers, institutions) = split_scores(&pagerank(&hetero.transition_operator(), &solver)?, &hetero)?;

    let citation = build_citation_graph(&slice);
    let pagerank_papers = citation_scores(&pagerank(&citation.transition_operator(), &solver)?, &citation)?;

    let projected = project_institution_graph(&slice);
    let irank = institution_scores(&pagerank(&projected.transition_operator(), &solver)?, &projected)?;

    let n: Vec<usize> = (1..=10).map(|k| k * 10).collect();
    for (title, tables) in [
        ("institutions", [rank(&institutions, Method::IPRank), rank(&irank, Method::IRank)]),
        ("papers", [rank(&papers, Method::IPRank), rank(&pagerank_papers, Method::PageRank)]),
    ] {
        let report = compare_report(&tables, &[], &[Metric::Spearman], &n)?;
        print!("{title:<13}");
        for row in &report.rows {
            match row.value {
                Some(v) => print!(" {v:>5.2}"),
                None => print!(" {:>5}", "NA"),
            }
        }
        println!();
    }
    println!("{:<13}{}", "top-N", n.iter().map(|k| format!(" {k:>5}")).collect::<String>());
    Ok(())
}
