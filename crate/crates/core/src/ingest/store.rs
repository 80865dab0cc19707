//! Persisted cleaned corpus.
//!
//! ```text
//! #iprank-clean v1
//! id <TAB> YYYY-MM-DD <TAB> canonical|canonical <TAB> ref,ref
//! ```
//!
//! Institution names are already canonical and are read back verbatim.

use std::io::{BufRead, Write};

use chrono::NaiveDate;

use super::filter::{CleanRecord, InstitutionRegistry};
use super::slice::Corpus;
use crate::error::{Error, Result};

pub const CLEAN_HEADER: &str = "#iprank-clean v1";

pub fn write_clean_corpus<W: Write>(mut out: W, corpus: &Corpus) -> Result<()> {
    writeln!(out, "{CLEAN_HEADER}")?;
    let registry = corpus.registry();
    for rec in corpus.records() {
        let names: Vec<&str> = rec.institution_ids().iter().map(|&id| registry.name(id)).collect();
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            rec.paper_id,
            rec.pub_date.format("%Y-%m-%d"),
            names.join("|"),
            rec.references.join(",")
        )?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_clean_corpus<R: BufRead>(input: R) -> Result<Corpus> {
    let mut registry = InstitutionRegistry::new();
    let mut records = Vec::new();
    let bad = |line: usize, message: String| Error::CorpusStore { line, message };
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let n = i + 1;
        if n == 1 {
            if line.trim_end() != CLEAN_HEADER {
                return Err(bad(n, format!("missing header {CLEAN_HEADER:?}")));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(bad(n, format!("expected 4 fields, found {}", fields.len())));
        }
        let date = NaiveDate::parse_from_str(fields[1], "%Y-%m-%d")
            .map_err(|e| bad(n, format!("bad date {:?}: {e}", fields[1])))?;
        let ids = fields[2]
            .split('|')
            .filter(|s| !s.is_empty())
            .map(|name| registry.intern(name))
            .collect();
        let refs = fields[3]
            .split(',')
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        let rec = CleanRecord::new(fields[0].to_string(), date, ids, refs)
            .ok_or_else(|| bad(n, "record has no institution".into()))?;
        records.push(rec);
    }
    Ok(Corpus::new(records, registry))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{ingest_records, AliasTable};

    #[test]
    fn round_trip_preserves_bytes() {
        let mut aliases = AliasTable::new();
        aliases
            .insert("University of California", "University of California, Berkeley")
            .unwrap();
        let text = "A\t1950-01-01\tUniversity of California|Dept. of Physics, Yale University\tB\n\
                    B\t1940-06-30\tHarvard University\t\n";
        let f = ingest_records(text.as_bytes(), &aliases).unwrap();
        let corpus = Corpus::new(f.records, f.registry);
        let mut first = Vec::new();
        write_clean_corpus(&mut first, &corpus).unwrap();
        let back = read_clean_corpus(&first[..]).unwrap();
        let mut second = Vec::new();
        write_clean_corpus(&mut second, &back).unwrap();
        assert_eq!(first, second);
        assert_eq!(back.records(), corpus.records());
        assert_eq!(back.registry().name(0), "University of California, Berkeley");
    }

    #[test]
    fn rejects_missing_header_and_empty_institutions() {
        assert!(read_clean_corpus("A\t2000-01-01\tX\t\n".as_bytes()).is_err());
        let text = format!("{CLEAN_HEADER}\nA\t2000-01-01\t\t\n");
        assert!(read_clean_corpus(text.as_bytes()).is_err());
    }
}
