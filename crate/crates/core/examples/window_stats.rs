//! Corpus statistics over consecutive five-year windows of a synthetic
//! corpus, plus the whole span.

use iprank::ingest::{corpus_stats, ingest_records, AliasTable, Corpus, TimeWindow};
use iprank::synth::{generate_text, SynthConfig};

fn main() -> iprank::Result<()> {
    let cfg = SynthConfig {
        n_papers: 20_000,
        n_institutions: 2_000,
        n_citations: 150_000,
        start_year: 1989,
        end_year: 2013,
        ..Default::default()
    };
    let filtered = ingest_records(generate_text(&cfg).as_bytes(), &AliasTable::new())?;
    println!("{}", filtered.report.to_json());
    let corpus = Corpus::new(filtered.records, filtered.registry);

    let mut windows = vec![corpus.year_range().expect("non-empty")];
    for start in (1994..=2009).step_by(5) {
        windows.push(TimeWindow::new(start, start + 4)?);
    }
    println!(
        "\n{:<10} {:>8} {:>10} {:>8} {:>10} {:>10}",
        "window", "papers", "+refs", "insts", "citations", "affil."
    );
    for w in windows {
        let s = corpus_stats(&corpus.slice(w));
        println!(
            "{:<10} {:>8} {:>10} {:>8} {:>10} {:>10}",
            w.to_string(),
            s.n_papers,
            s.n_papers_with_references,
            s.n_institutions,
            s.n_citation_links,
            s.n_affiliation_links
        );
    }
    Ok(())
}
