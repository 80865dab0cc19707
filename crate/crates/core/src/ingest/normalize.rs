//! Institution name normalization.
//!
//! Resolution order: an explicit alias table match on the whole raw string,
//! then the first-level unit (last comma-separated segment, sub-unit
//! segments dropped) looked up in the alias table again, then title-cased.

use std::collections::HashMap;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Characters that may not appear in canonical names because they are
/// separators in the record and clean-corpus formats.
const RESERVED: [char; 4] = ['\t', '|', ';', '\n'];

/// Tokens that mark a segment as a sub-unit of a larger organization.
const SUB_UNIT_TOKENS: [&str; 10] = [
    "laboratory",
    "laboratories",
    "department",
    "dept",
    "division",
    "school of",
    "faculty",
    "institute of physics",
    "center for",
    "centre for",
];

/// Table of raw institution names mapped onto canonical names.
///
/// Keys are compared after [`alias_key`] folding. Every canonical name is
/// also registered as an alias of itself, so normalizing a canonical name is
/// a fixed point. Chained mappings (`a -> b`, `b -> c`) are rejected.
#[derive(Debug, Clone, Default)]
pub struct AliasTable {
    map: HashMap<String, String>,
}

impl AliasTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, raw: &str, canonical: &str) -> std::result::Result<(), String> {
        let canonical = collapse_whitespace(canonical);
        if canonical.is_empty() {
            return Err("empty canonical name".into());
        }
        if canonical.contains(RESERVED) {
            return Err(format!("canonical name {canonical:?} contains a reserved separator"));
        }
        let raw_key = alias_key(raw);
        if raw_key.is_empty() {
            return Err("empty raw name".into());
        }
        let target_key = alias_key(&canonical);
        for key in [&target_key, &raw_key] {
            if let Some(existing) = self.map.get(key) {
                if *existing != canonical {
                    return Err(format!(
                        "{key:?} already maps to {existing:?}, cannot also map to {canonical:?}"
                    ));
                }
            }
        }
        self.map.insert(target_key, canonical.clone());
        self.map.insert(raw_key, canonical);
        Ok(())
    }

    /// Reads `raw<TAB>canonical` lines. Blank lines and `#` comments are skipped.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut table = Self::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (raw, canonical) = line.split_once('\t').ok_or_else(|| Error::AliasTable {
                line: i + 1,
                message: "expected raw_name<TAB>canonical_name".into(),
            })?;
            table.insert(raw, canonical).map_err(|message| Error::AliasTable {
                line: i + 1,
                message,
            })?;
        }
        Ok(table)
    }

    pub fn lookup(&self, raw: &str) -> Option<&str> {
        self.map.get(&alias_key(raw)).map(String::as_str)
    }

    /// Number of distinct folded keys, canonical self-entries included.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Folds a raw name for alias lookup: lowercase, whitespace collapsed,
/// punctuation stripped at both ends.
pub fn alias_key(raw: &str) -> String {
    collapse_whitespace(trim_punctuation(raw)).to_lowercase()
}

/// Maps a raw affiliation string to its canonical first-level institution.
pub fn normalize_institution(raw: &str, aliases: &AliasTable) -> Result<String> {
    if raw.trim().is_empty() {
        return Err(Error::EmptyInstitution);
    }
    if let Some(target) = aliases.lookup(raw) {
        return Ok(target.to_string());
    }
    let unit = first_level_unit(raw).ok_or(Error::EmptyInstitution)?;
    if let Some(target) = aliases.lookup(&unit) {
        return Ok(target.to_string());
    }
    Ok(title_case(&unit))
}

fn first_level_unit(raw: &str) -> Option<String> {
    let segments: Vec<String> = raw
        .split(',')
        .map(|s| collapse_whitespace(trim_punctuation(s)))
        .filter(|s| !s.is_empty())
        .collect();
    // Sub-unit segments only ever precede the unit they belong to.
    let unit = segments
        .iter()
        .rposition(|s| !is_sub_unit(s))
        .map(|i| &segments[i])
        .or(segments.last())?;
    Some(unit.clone())
}

fn is_sub_unit(segment: &str) -> bool {
    let lower = segment.to_lowercase();
    let names_university = lower.contains("university") || lower.contains("college");
    !names_university && SUB_UNIT_TOKENS.iter().any(|t| lower.contains(t))
}

fn trim_punctuation(s: &str) -> &str {
    s.trim_matches(|c: char| c.is_whitespace() || c.is_ascii_punctuation())
}

fn collapse_whitespace(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Connectives kept in lower case unless they open the name.
const MINOR_WORDS: [&str; 12] = ["of", "at", "the", "for", "and", "in", "on", "de", "di", "du", "la", "fur"];

/// Capitalizes each word; all-caps words of two or more letters are kept
/// as acronyms unless the whole multi-word name is shouted.
fn title_case(s: &str) -> String {
    let shouted = s.contains(' ') && !s.chars().any(char::is_lowercase);
    s.split(' ')
        .enumerate()
        .map(|(i, w)| {
            let lower = w.to_lowercase();
            if i > 0 && MINOR_WORDS.contains(&lower.as_str()) {
                lower
            } else if shouted {
                title_word(&lower)
            } else {
                title_word(w)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn title_word(word: &str) -> String {
    let letters: Vec<char> = word.chars().filter(|c| c.is_alphabetic()).collect();
    if letters.len() >= 2 && letters.iter().all(|c| c.is_uppercase()) {
        return word.to_string();
    }
    let mut chars = word.chars();
    let Some(first) = chars.next() else {
        return String::new();
    };
    let mut upper = first.to_uppercase();
    let mut out = String::with_capacity(word.len());
    match (upper.next(), upper.next()) {
        (Some(u), None) => out.push(u),
        _ => out.push(first),
    }
    out.extend(chars.flat_map(char::to_lowercase));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn berkeley() -> AliasTable {
        let mut t = AliasTable::new();
        t.insert("University of California at Berkeley", "University of California, Berkeley")
            .unwrap();
        t.insert("California University at Berkeley", "University of California, Berkeley")
            .unwrap();
        t.insert("University of California", "University of California, Berkeley")
            .unwrap();
        t
    }

    #[test]
    fn yale_laboratory_reduces_to_university() {
        let got = normalize_institution("Sloane Physics Laboratory, Yale university", &AliasTable::new())
            .unwrap();
        assert_eq!(got, "Yale University");
    }

    #[test]
    fn berkeley_aliases_merge() {
        let t = berkeley();
        for raw in [
            "University of California at Berkeley",
            "california university at berkeley.",
            "University  of California",
            "University of California, Berkeley",
        ] {
            assert_eq!(normalize_institution(raw, &t).unwrap(), "University of California, Berkeley");
        }
    }

    #[test]
    fn canonical_name_is_unchanged() {
        assert_eq!(
            normalize_institution("Harvard University", &AliasTable::new()).unwrap(),
            "Harvard University"
        );
    }

    #[test]
    fn alias_applies_to_extracted_unit() {
        let mut t = AliasTable::new();
        t.insert("MIT", "Massachusetts Institute of Technology").unwrap();
        assert_eq!(
            normalize_institution("Research Laboratory of Electronics, MIT", &t).unwrap(),
            "Massachusetts Institute of Technology"
        );
    }

    #[test]
    fn empty_names_are_rejected() {
        assert!(matches!(
            normalize_institution("   ", &AliasTable::new()),
            Err(Error::EmptyInstitution)
        ));
        assert!(normalize_institution(" , ;", &AliasTable::new()).is_err());
    }

    #[test]
    fn acronyms_survive_title_casing() {
        assert_eq!(
            normalize_institution("Department of Physics, CERN", &AliasTable::new()).unwrap(),
            "CERN"
        );
    }

    #[test]
    fn connectives_stay_lower_case() {
        let t = AliasTable::new();
        assert_eq!(
            normalize_institution("Dept. of Physics, UNIVERSITY OF THE WITWATERSRAND", &t).unwrap(),
            "University of the Witwatersrand"
        );
        assert_eq!(
            normalize_institution("massachusetts institute of technology", &t).unwrap(),
            "Massachusetts Institute of Technology"
        );
        assert_eq!(normalize_institution("the university at buffalo", &t).unwrap(), "The University at Buffalo");
    }

    #[test]
    fn chained_aliases_are_rejected() {
        let mut t = AliasTable::new();
        t.insert("A", "B").unwrap();
        assert!(t.insert("B", "C").is_err());

        let mut t = AliasTable::new();
        t.insert("B", "C").unwrap();
        assert!(t.insert("A", "B").is_err());
    }

    #[test]
    fn alias_file_parsing() {
        let text = "# comment\nUniv. of Chicago.\tUniversity of Chicago\n\nMIT\tMassachusetts Institute of Technology\n";
        let t = AliasTable::from_reader(text.as_bytes()).unwrap();
        assert_eq!(t.lookup("UNIV.  of  Chicago"), Some("University of Chicago"));
        assert!(AliasTable::from_reader("no tab here\n".as_bytes()).is_err());
    }
}
