//! Reduce raw affiliation strings to canonical first-level institutions,
//! with and without an alias table.

use iprank::ingest::{normalize_institution, AliasTable};

const ALIASES: &str = include_str!("../data/aliases.tsv");

fn main() -> iprank::Result<()> {
    let aliases = AliasTable::from_reader(ALIASES.as_bytes())?;
    let raw = [
        "Sloane Physics Laboratory, Yale university",
        "Yale University",
        "University of California at Berkeley",
        "California University at Berkeley",
        "Department of Physics, University of California",
        "Laboratory for Nuclear Science, MIT",
        "James Franck Institute, Univ. of Chicago",
        "Theory Division, CERN",
        "  department of physics,   STANFORD university. ",
    ];
    println!("{:<50} {:<38} with aliases", "raw", "heuristic only");
    for r in raw {
        let bare = normalize_institution(r, &AliasTable::new())?;
        let aliased = normalize_institution(r, &aliases)?;
        println!("{:<50} {:<38} {}", format!("{r:?}"), bare, aliased);
    }
    Ok(())
}
