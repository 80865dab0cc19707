//! Line-delimited bibliographic record format.
//!
//! One record per line, four tab-separated fields:
//!
//! ```text
//! id <TAB> YYYY-MM-DD <TAB> aff;aff|aff|... <TAB> ref,ref,...
//! ```
//!
//! Authors are separated by `|`, the affiliations of one author by `;`.
//! The reference field may be empty but must be present.

use std::fmt;
use std::io::{self, BufRead};

use chrono::{Datelike, NaiveDate};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AuthorEntry {
    pub affiliations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BibRecord {
    pub paper_id: String,
    pub pub_date: NaiveDate,
    pub authors: Vec<AuthorEntry>,
    pub references: Vec<String>,
}

impl BibRecord {
    pub fn year(&self) -> i32 {
        self.pub_date.year()
    }

    /// Serializes the record back into the line format, without the newline.
    pub fn to_line(&self) -> String {
        let authors = self
            .authors
            .iter()
            .map(|a| a.affiliations.join(";"))
            .collect::<Vec<_>>()
            .join("|");
        format!(
            "{}\t{}\t{}\t{}",
            self.paper_id,
            self.pub_date.format("%Y-%m-%d"),
            authors,
            self.references.join(",")
        )
    }
}

/// A record that could not be parsed. Lines are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for RecordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Default)]
pub struct ParseOutcome {
    pub records: Vec<BibRecord>,
    pub errors: Vec<RecordError>,
}

/// Parses a record stream. Malformed lines are skipped and reported; blank
/// lines are ignored and do not count as records.
pub fn parse_records<R: BufRead>(mut input: R) -> io::Result<ParseOutcome> {
    let mut outcome = ParseOutcome::default();
    let mut buf = Vec::new();
    let mut line_no = 0;
    loop {
        buf.clear();
        if input.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let line = match std::str::from_utf8(&buf) {
            Ok(s) => s.trim_end_matches(['\n', '\r']),
            Err(_) => {
                outcome.errors.push(RecordError {
                    line: line_no,
                    message: "invalid UTF-8".into(),
                });
                continue;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        match parse_line(line) {
            Ok(record) => outcome.records.push(record),
            Err(message) => outcome.errors.push(RecordError {
                line: line_no,
                message,
            }),
        }
    }
    Ok(outcome)
}

pub fn parse_line(line: &str) -> Result<BibRecord, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 4 {
        return Err(format!("expected 4 tab-separated fields, found {}", fields.len()));
    }
    let paper_id = fields[0].trim();
    if paper_id.is_empty() {
        return Err("missing paper id".into());
    }
    let date = fields[1].trim();
    if date.is_empty() {
        return Err("missing publication date".into());
    }
    let pub_date = NaiveDate::parse_from_str(date, "%Y-%m-%d")
        .map_err(|e| format!("bad publication date {date:?}: {e}"))?;

    let authors = if fields[2].trim().is_empty() {
        Vec::new()
    } else {
        fields[2]
            .split('|')
            .map(|group| AuthorEntry {
                affiliations: group
                    .split(';')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect(),
            })
            .collect()
    };

    let references = fields[3]
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();

    Ok(BibRecord {
        paper_id: paper_id.to_string(),
        pub_date,
        authors,
        references,
    })
}
