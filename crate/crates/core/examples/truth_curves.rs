//! Recall and precision curves against a ground-truth set. Here the truth
//! is the set of institutions behind the 25 most-cited papers of a
//! synthetic corpus; with real data, load a list with
//! `GroundTruthSet::from_reader` (see `data/award_institutions.txt`).

use iprank::prelude::*;
use iprank::synth::{generate_text, SynthConfig};

fn main() -> iprank::Result<()> {
    let cfg = SynthConfig { n_papers: 5_000, n_institutions: 400, n_citations: 40_000, seed: 3, ..Default::default() };
    let filtered = ingest_records(generate_text(&cfg).as_bytes(), &AliasTable::new())?;
    let corpus = Corpus::new(filtered.records, filtered.registry);
    let slice = corpus.slice(corpus.year_range().expect("non-empty"));
    let solver = SolverConfig::default();

    let mut cited = vec![0usize; slice.n_papers()];
    for &(_, q) in &slice.citation_edges {
        cited[q as usize] += 1;
    }
    let mut papers: Vec<usize> = (0..slice.n_papers()).collect();
    papers.sort_by(|&a, &b| cited[b].cmp(&cited[a]).then(a.cmp(&b)));
    let by_paper = slice.institutions_by_paper();
    let truth = GroundTruthSet::new(
        EntityClass::Institution,
        "most-cited",
        papers[..25]
            .iter()
            .flat_map(|&p| by_paper[p].iter().map(|&i| slice.institutions[i as usize].name.clone())),
    )?;
    println!("# truth set: {} institutions", truth.len());

    let hetero = build_hetero_graph(&slice)?;
    let (_, institutions) = split_scores(&pagerank(&hetero.transition_operator(), &solver)?, &hetero)?;
    let projected = project_institution_graph(&slice);
    let irank = institution_scores(&pagerank(&projected.transition_operator(), &solver)?, &projected)?;
    let tables = [rank(&institutions, Method::IPRank), rank(&irank, Method::IRank)];

    let n: Vec<usize> = (1..=20).collect();
    let report = compare_report(&tables, &[truth], &[Metric::Recall, Metric::Precision], &n)?;
    let mut csv = Vec::new();
    report.write_curves_csv(&mut csv)?;
    print!("{}", String::from_utf8_lossy(&csv));
    Ok(())
}
