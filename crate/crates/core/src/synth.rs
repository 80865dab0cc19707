//! Seeded synthetic corpora in the record format, for demos and load tests.

use chrono::NaiveDate;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ingest::{AuthorEntry, BibRecord};

#[derive(Debug, Clone)]
pub struct SynthConfig {
    pub n_papers: usize,
    pub n_institutions: usize,
    /// Target number of citation links (resolvable references).
    pub n_citations: usize,
    pub start_year: i32,
    pub end_year: i32,
    pub max_authors: usize,
    /// Probability that a reference points outside the corpus.
    pub external_reference_rate: f64,
    /// Probability that a cited paper is picked in proportion to the
    /// citations it already has rather than uniformly.
    pub preferential_rate: f64,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self {
            n_papers: 1_000,
            n_institutions: 200,
            n_citations: 10_000,
            start_year: 1990,
            end_year: 2013,
            max_authors: 4,
            external_reference_rate: 0.02,
            preferential_rate: 0.6,
            seed: 7,
        }
    }
}

/// Canonical name of synthetic institution `k`.
pub fn institution_name(k: usize) -> String {
    format!("University {k:05}")
}

/// Generates records in ascending date order; papers only cite earlier ones.
pub fn generate(cfg: &SynthConfig) -> Vec<BibRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.n_papers;
    let span = (cfg.end_year - cfg.start_year + 1).max(1) as usize;

    let mut years: Vec<i32> = (0..n).map(|_| cfg.start_year + rng.gen_range(0..span) as i32).collect();
    years.sort_unstable();

    // Papers early in the list have few predecessors; scale the per-paper
    // mean so the expected total stays near the target.
    let mean_refs = cfg.n_citations as f64 / n.max(1) as f64;
    let mut cited_pool: Vec<u32> = Vec::with_capacity(cfg.n_citations);
    let mut records = Vec::with_capacity(n);

    for (i, &year) in years.iter().enumerate() {
        let month = rng.gen_range(1..=12);
        let day = rng.gen_range(1..=28);
        let pub_date = NaiveDate::from_ymd_opt(year, month, day).expect("valid date");

        let n_authors = rng.gen_range(1..=cfg.max_authors.max(1));
        // The first n_institutions papers visit every institution once.
        let home = if i < cfg.n_institutions { i } else { rng.gen_range(0..cfg.n_institutions.max(1)) };
        let authors = (0..n_authors)
            .map(|a| {
                // The first author is at home; co-authors mostly are too.
                let k = if a == 0 || rng.gen_bool(0.6) { home } else { rng.gen_range(0..cfg.n_institutions.max(1)) };
                let mut affiliations = vec![affiliation_variant(&mut rng, k)];
                if rng.gen_bool(0.2) {
                    let other = rng.gen_range(0..cfg.n_institutions.max(1));
                    affiliations.push(affiliation_variant(&mut rng, other));
                }
                AuthorEntry { affiliations }
            })
            .collect();

        let mut references = Vec::new();
        if i > 0 {
            let want = if mean_refs > 0.0 { rng.gen_range(0.0..2.0 * mean_refs).round() as usize } else { 0 };
            for _ in 0..want.min(i) {
                if rng.gen_bool(cfg.external_reference_rate) {
                    references.push(format!("EXT.{}", rng.gen_range(0..n.max(1) * 10)));
                    continue;
                }
                let target = if !cited_pool.is_empty() && rng.gen_bool(cfg.preferential_rate) {
                    cited_pool[rng.gen_range(0..cited_pool.len())]
                } else {
                    rng.gen_range(0..i) as u32
                };
                cited_pool.push(target);
                references.push(paper_id(target as usize));
            }
        }

        records.push(BibRecord {
            paper_id: paper_id(i),
            pub_date,
            authors,
            references,
        });
    }
    records
}

/// Records serialized as newline-terminated lines.
pub fn generate_text(cfg: &SynthConfig) -> String {
    let mut out = String::new();
    for r in generate(cfg) {
        out.push_str(&r.to_line());
        out.push('\n');
    }
    out
}

fn paper_id(i: usize) -> String {
    format!("SYN.{i}")
}

fn affiliation_variant(rng: &mut ChaCha8Rng, k: usize) -> String {
    let name = institution_name(k);
    match rng.gen_range(0..4) {
        0 => format!("Department of Physics, {name}"),
        1 => format!("Laboratory for Nuclear Science, {}", name.to_lowercase()),
        _ => name,
    }
}
