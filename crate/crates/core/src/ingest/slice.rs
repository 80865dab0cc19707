use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::filter::{CleanRecord, InstitutionRegistry};
use crate::error::{Error, Result};

/// Inclusive range of publication years.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TimeWindow {
    pub start_year: i32,
    pub end_year: i32,
}

impl TimeWindow {
    pub fn new(start_year: i32, end_year: i32) -> Result<Self> {
        if start_year > end_year {
            return Err(Error::InvalidWindow {
                start: start_year,
                end: end_year,
            });
        }
        Ok(Self {
            start_year,
            end_year,
        })
    }

    pub fn contains(&self, year: i32) -> bool {
        (self.start_year..=self.end_year).contains(&year)
    }

    pub fn contains_window(&self, other: &TimeWindow) -> bool {
        self.start_year <= other.start_year && other.end_year <= self.end_year
    }
}

impl fmt::Display for TimeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start_year, self.end_year)
    }
}

impl FromStr for TimeWindow {
    type Err = String;

    /// Parses `start:end`, both years inclusive.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| format!("expected START:END, got {s:?}"))?;
        let start: i32 = a.trim().parse().map_err(|e| format!("bad start year {a:?}: {e}"))?;
        let end: i32 = b.trim().parse().map_err(|e| format!("bad end year {b:?}: {e}"))?;
        TimeWindow::new(start, end).map_err(|e| e.to_string())
    }
}

/// The full cleaned corpus with an id index for resolving references.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    records: Vec<CleanRecord>,
    registry: InstitutionRegistry,
    index: HashMap<String, usize>,
}

impl Corpus {
    pub fn new(records: Vec<CleanRecord>, registry: InstitutionRegistry) -> Self {
        let index = records
            .iter()
            .enumerate()
            .map(|(i, r)| (r.paper_id.clone(), i))
            .collect();
        Self {
            records,
            registry,
            index,
        }
    }

    pub fn records(&self) -> &[CleanRecord] {
        &self.records
    }

    pub fn registry(&self) -> &InstitutionRegistry {
        &self.registry
    }

    pub fn get(&self, paper_id: &str) -> Option<&CleanRecord> {
        self.index.get(paper_id).map(|&i| &self.records[i])
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Smallest window covering every record, `None` for an empty corpus.
    pub fn year_range(&self) -> Option<TimeWindow> {
        let min = self.records.iter().map(CleanRecord::year).min()?;
        let max = self.records.iter().map(CleanRecord::year).max()?;
        Some(TimeWindow {
            start_year: min,
            end_year: max,
        })
    }

    /// Papers published in `window`, every corpus paper they cite (at any
    /// date), and the institutions of both groups. References that do not
    /// resolve in the corpus are dropped and counted.
    pub fn slice(&self, window: TimeWindow) -> CorpusSlice {
        let in_window: Vec<usize> = (0..self.records.len())
            .filter(|&i| window.contains(self.records[i].year()))
            .collect();
        if in_window.is_empty() {
            log::warn!("time window {window} contains no papers");
        }

        let mut slice = CorpusSlice {
            window: Some(window),
            n_in_window: in_window.len(),
            ..CorpusSlice::default()
        };
        let mut local: HashMap<usize, u32> = HashMap::with_capacity(in_window.len() * 2);
        let mut inst_local: HashMap<u32, u32> = HashMap::new();

        let mut add_paper = |slice: &mut CorpusSlice, rec_idx: usize| -> u32 {
            if let Some(&l) = local.get(&rec_idx) {
                return l;
            }
            let l = slice.paper_ids.len() as u32;
            local.insert(rec_idx, l);
            slice.paper_ids.push(self.records[rec_idx].paper_id.clone());
            l
        };

        for &i in &in_window {
            add_paper(&mut slice, i);
        }
        let mut unresolved_ids: HashSet<&str> = HashSet::new();
        let mut citations = Vec::new();
        for (citing, &i) in in_window.iter().enumerate() {
            let citing = citing as u32;
            for r in &self.records[i].references {
                match self.index.get(r.as_str()) {
                    Some(&j) => {
                        let cited = add_paper(&mut slice, j);
                        citations.push((citing, cited));
                    }
                    None => {
                        slice.unresolved_references += 1;
                        unresolved_ids.insert(r);
                    }
                }
            }
        }
        slice.unresolved_reference_ids = unresolved_ids.len();
        // Citation is a set relation: collapse repeated pairs, keep first order.
        let mut seen = HashSet::with_capacity(citations.len());
        citations.retain(|e| seen.insert(*e));
        slice.citation_edges = citations;

        let mut order: Vec<(u32, usize)> = local.iter().map(|(&rec, &l)| (l, rec)).collect();
        order.sort_unstable();
        for (l, rec) in order {
            for &cid in self.records[rec].institution_ids() {
                let next = slice.institutions.len() as u32;
                let li = *inst_local.entry(cid).or_insert_with(|| {
                    slice.institutions.push(SliceInstitution {
                        canonical_id: cid,
                        name: self.registry.name(cid).to_string(),
                    });
                    next
                });
                slice.affiliation_edges.push((l, li));
            }
        }
        slice
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceInstitution {
    pub canonical_id: u32,
    pub name: String,
}

/// A windowed view of the corpus.
///
/// Papers are stored in-window first (corpus order), then reference-only
/// papers in first-citation order. Institutions are in first-appearance
/// order over that paper list. Edges use these local indices.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CorpusSlice {
    pub window: Option<TimeWindow>,
    pub paper_ids: Vec<String>,
    pub n_in_window: usize,
    pub institutions: Vec<SliceInstitution>,
    /// (citing, cited) paper indices; citing is always in-window.
    pub citation_edges: Vec<(u32, u32)>,
    /// (paper index, institution index).
    pub affiliation_edges: Vec<(u32, u32)>,
    /// Reference occurrences that did not resolve to a corpus paper.
    pub unresolved_references: usize,
    pub unresolved_reference_ids: usize,
}

impl CorpusSlice {
    pub fn in_window_papers(&self) -> &[String] {
        &self.paper_ids[..self.n_in_window]
    }

    /// Cited papers published outside the window.
    pub fn reference_papers(&self) -> &[String] {
        &self.paper_ids[self.n_in_window..]
    }

    pub fn n_papers(&self) -> usize {
        self.paper_ids.len()
    }

    pub fn n_institutions(&self) -> usize {
        self.institutions.len()
    }

    pub fn citations(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.citation_edges
            .iter()
            .map(|&(a, b)| (self.paper_ids[a as usize].as_str(), self.paper_ids[b as usize].as_str()))
    }

    /// Institution indices per paper, in edge order.
    pub fn institutions_by_paper(&self) -> Vec<Vec<u32>> {
        let mut by_paper = vec![Vec::new(); self.paper_ids.len()];
        for &(p, i) in &self.affiliation_edges {
            by_paper[p as usize].push(i);
        }
        by_paper
    }

    pub fn is_empty(&self) -> bool {
        self.paper_ids.is_empty()
    }
}

/// Corpus-level counts with the same row semantics as a dataset summary
/// table: papers, papers plus their references, institutions, paper-paper
/// links and paper-institution links.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub n_papers: usize,
    pub n_papers_with_references: usize,
    pub n_institutions: usize,
    pub n_citation_links: usize,
    pub n_affiliation_links: usize,
}

pub fn corpus_stats(slice: &CorpusSlice) -> StatsSummary {
    StatsSummary {
        n_papers: slice.n_in_window,
        n_papers_with_references: slice.paper_ids.len(),
        n_institutions: slice.institutions.len(),
        n_citation_links: slice.citation_edges.len(),
        n_affiliation_links: slice.affiliation_edges.len(),
    }
}

impl fmt::Display for StatsSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "papers\t{}", self.n_papers)?;
        writeln!(f, "papers_and_references\t{}", self.n_papers_with_references)?;
        writeln!(f, "institutions\t{}", self.n_institutions)?;
        writeln!(f, "citation_links\t{}", self.n_citation_links)?;
        write!(f, "affiliation_links\t{}", self.n_affiliation_links)
    }
}
