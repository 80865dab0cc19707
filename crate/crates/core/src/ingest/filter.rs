//! Record filtering and institution resolution.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::io::BufRead;

use chrono::{Datelike, NaiveDate};
use serde::Serialize;

use super::normalize::{normalize_institution, AliasTable};
use super::record::{parse_records, BibRecord};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalInstitution {
    pub canonical_id: u32,
    pub canonical_name: String,
    /// Raw strings that resolved to this institution.
    pub alias_set: BTreeSet<String>,
}

/// Interns canonical institution names to dense ids in first-seen order.
#[derive(Debug, Clone, Default)]
pub struct InstitutionRegistry {
    institutions: Vec<CanonicalInstitution>,
    by_name: HashMap<String, u32>,
    by_raw: HashMap<String, Option<u32>>,
}

impl InstitutionRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id for a canonical name, creating it when unseen.
    pub fn intern(&mut self, canonical_name: &str) -> u32 {
        if let Some(&id) = self.by_name.get(canonical_name) {
            return id;
        }
        let id = self.institutions.len() as u32;
        self.institutions.push(CanonicalInstitution {
            canonical_id: id,
            canonical_name: canonical_name.to_string(),
            alias_set: BTreeSet::new(),
        });
        self.by_name.insert(canonical_name.to_string(), id);
        id
    }

    /// Resolves a raw affiliation. `None` when the string normalizes to
    /// nothing. Results are cached per raw string.
    fn resolve(&mut self, raw: &str, aliases: &AliasTable, report: &mut FilterReport) -> Option<u32> {
        if let Some(&cached) = self.by_raw.get(raw) {
            return cached;
        }
        let resolved = match normalize_institution(raw, aliases) {
            Ok(name) => {
                if name != raw.trim() {
                    report.names_reduced += 1;
                }
                let existed = self.by_name.contains_key(&name);
                let id = self.intern(&name);
                if existed {
                    report.names_merged += 1;
                }
                self.institutions[id as usize].alias_set.insert(raw.to_string());
                Some(id)
            }
            Err(_) => None,
        };
        self.by_raw.insert(raw.to_string(), resolved);
        resolved
    }

    pub fn get(&self, id: u32) -> Option<&CanonicalInstitution> {
        self.institutions.get(id as usize)
    }

    pub fn name(&self, id: u32) -> &str {
        &self.institutions[id as usize].canonical_name
    }

    pub fn id_of(&self, canonical_name: &str) -> Option<u32> {
        self.by_name.get(canonical_name).copied()
    }

    pub fn len(&self) -> usize {
        self.institutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.institutions.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CanonicalInstitution> {
        self.institutions.iter()
    }
}

/// A paper that passed every filter. Always carries at least one institution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanRecord {
    pub paper_id: String,
    pub pub_date: NaiveDate,
    institution_ids: Vec<u32>,
    pub references: Vec<String>,
}

impl CleanRecord {
    /// Returns `None` when `institution_ids` is empty. Duplicate ids are
    /// removed, keeping first occurrences.
    pub fn new(
        paper_id: String,
        pub_date: NaiveDate,
        institution_ids: Vec<u32>,
        references: Vec<String>,
    ) -> Option<Self> {
        let mut seen = HashSet::new();
        let institution_ids: Vec<u32> =
            institution_ids.into_iter().filter(|id| seen.insert(*id)).collect();
        if institution_ids.is_empty() {
            return None;
        }
        Some(Self {
            paper_id,
            pub_date,
            institution_ids,
            references,
        })
    }

    pub fn institution_ids(&self) -> &[u32] {
        &self.institution_ids
    }

    pub fn year(&self) -> i32 {
        self.pub_date.year()
    }
}

/// Per-criterion counts. Only `incomplete` and `no_institution` are record
/// drops; the remaining fields count affiliation-level effects.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FilterReport {
    pub records_in: usize,
    pub records_kept: usize,
    /// Malformed lines, duplicate ids.
    pub incomplete: usize,
    /// No resolvable affiliation on any author.
    pub no_institution: usize,
    /// Affiliations after an author's first one.
    pub later_affiliations_ignored: usize,
    /// Affiliation strings that normalized to nothing.
    pub unresolvable_affiliations: usize,
    /// Distinct raw strings whose canonical name differs from the raw text.
    pub names_reduced: usize,
    /// Distinct raw strings that resolved onto an existing canonical name.
    pub names_merged: usize,
}

impl FilterReport {
    pub fn dropped(&self) -> usize {
        self.incomplete + self.no_institution
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Default)]
pub struct FilteredCorpus {
    pub records: Vec<CleanRecord>,
    pub registry: InstitutionRegistry,
    pub report: FilterReport,
}

/// Keeps complete records, one institution per author (the first that
/// resolves), names reduced to canonical first-level units.
pub fn apply_filters(records: Vec<BibRecord>, aliases: &AliasTable) -> FilteredCorpus {
    let mut out = FilteredCorpus::default();
    out.report.records_in = records.len();
    let mut seen_ids = HashSet::with_capacity(records.len());

    for rec in records {
        if !seen_ids.insert(rec.paper_id.clone()) {
            out.report.incomplete += 1;
            continue;
        }
        let mut institutions = Vec::with_capacity(rec.authors.len());
        for author in &rec.authors {
            let mut taken = false;
            for raw in &author.affiliations {
                if taken {
                    out.report.later_affiliations_ignored += 1;
                    continue;
                }
                match out.registry.resolve(raw, aliases, &mut out.report) {
                    Some(id) => {
                        institutions.push(id);
                        taken = true;
                    }
                    None => out.report.unresolvable_affiliations += 1,
                }
            }
        }
        match CleanRecord::new(rec.paper_id, rec.pub_date, institutions, rec.references) {
            Some(clean) => out.records.push(clean),
            None => out.report.no_institution += 1,
        }
    }
    out.report.records_kept = out.records.len();
    out
}

/// Parses and filters a record stream in one pass. Parse failures are
/// counted as incomplete records.
pub fn ingest_records<R: BufRead>(input: R, aliases: &AliasTable) -> Result<FilteredCorpus> {
    let parsed = parse_records(input)?;
    for err in &parsed.errors {
        log::debug!("skipping record: {err}");
    }
    let mut filtered = apply_filters(parsed.records, aliases);
    filtered.report.records_in += parsed.errors.len();
    filtered.report.incomplete += parsed.errors.len();
    Ok(filtered)
}
