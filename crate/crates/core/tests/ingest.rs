mod common;

use std::collections::HashSet;

use common::*;
use iprank::ingest::{
    alias_key, apply_filters, corpus_stats, ingest_records, normalize_institution, read_clean_corpus,
    write_clean_corpus, AliasTable, Corpus, TimeWindow,
};
use iprank::synth::{generate, generate_text, SynthConfig};
use proptest::prelude::*;

fn berkeley_aliases() -> AliasTable {
    AliasTable::from_reader(
        "# Berkeley variants\n\
         University of California at Berkeley\tUniversity of California, Berkeley\n\
         California University at Berkeley\tUniversity of California, Berkeley\n\
         University of California\tUniversity of California, Berkeley\n\
         MIT\tMassachusetts Institute of Technology\n"
            .as_bytes(),
    )
    .unwrap()
}

fn small_synth(seed: u64) -> SynthConfig {
    SynthConfig {
        n_papers: 120,
        n_institutions: 25,
        n_citations: 500,
        start_year: 1990,
        end_year: 2000,
        seed,
        ..Default::default()
    }
}

#[test]
fn yale_laboratory_and_berkeley_variants() {
    let aliases = berkeley_aliases();
    let n = |raw| normalize_institution(raw, &aliases).unwrap();
    assert_eq!(n("Sloane Physics Laboratory, Yale university"), n("Yale University"));
    let berkeley = "University of California, Berkeley";
    assert_eq!(n("University of California at Berkeley"), berkeley);
    assert_eq!(n("California University at Berkeley"), berkeley);
    assert_eq!(n("Department of Physics, University of California"), berkeley);
    assert_eq!(n(berkeley), berkeley);
    assert_eq!(n("Laboratory for Nuclear Science, MIT"), "Massachusetts Institute of Technology");
}

#[test]
fn alias_targets_are_fixed_points() {
    let aliases = berkeley_aliases();
    for raw in [
        "University of California at Berkeley",
        "California University at Berkeley",
        "University of California",
        "MIT",
    ] {
        let target = aliases.lookup(raw).unwrap();
        assert_eq!(aliases.lookup(target), Some(target));
        assert_eq!(normalize_institution(target, &aliases).unwrap(), target);
    }
}

#[test]
fn chained_aliases_are_rejected() {
    let text = "A Univ\tB University\nB University\tC University\n";
    assert!(AliasTable::from_reader(text.as_bytes()).is_err());
}

#[test]
fn empty_affiliation_is_rejected() {
    assert!(normalize_institution("  ", &AliasTable::new()).is_err());
    assert!(normalize_institution(", ,", &AliasTable::new()).is_err());
}

#[test]
fn toy_stats_over_the_full_range() {
    let s = corpus_stats(&toy_slice());
    assert_eq!(
        (s.n_papers, s.n_papers_with_references, s.n_institutions, s.n_citation_links, s.n_affiliation_links),
        (3, 3, 4, 2, 5)
    );
}

#[test]
fn references_outside_the_window_are_pulled_in() {
    let c = toy_corpus();
    let s = c.slice(TimeWindow::new(2010, 2010).unwrap());
    assert_eq!(s.in_window_papers(), ["P1"]);
    assert_eq!(s.reference_papers(), ["P2", "P3"]);
    assert_eq!(s.citation_edges.len(), 2);
}

#[test]
fn store_round_trip_is_byte_exact() {
    let f = ingest_records(generate_text(&small_synth(3)).as_bytes(), &AliasTable::new()).unwrap();
    let corpus = Corpus::new(f.records, f.registry);
    let mut first = Vec::new();
    write_clean_corpus(&mut first, &corpus).unwrap();
    let back = read_clean_corpus(first.as_slice()).unwrap();
    let mut second = Vec::new();
    write_clean_corpus(&mut second, &back).unwrap();
    assert_eq!(first, second);
    assert_eq!(back.len(), corpus.len());
    assert_eq!(back.registry().len(), corpus.registry().len());
}

fn raw_name() -> impl Strategy<Value = String> {
    let word = prop::sample::select(vec![
        "Yale", "university", "UNIVERSITY", "of", "Physics", "Laboratory", "Department", "dept.",
        "CERN", "Harvard", "college", "Center for", "Theory", "mcgill", "école", "Institute of Physics",
        "IBM", "Research", "(LBL)", "Berkeley", "California", "at", "school of",
    ]);
    let segment = prop::collection::vec(word, 1..4).prop_map(|w| w.join(" "));
    prop::collection::vec(segment, 1..4).prop_map(|s| s.join(", "))
}

proptest! {
    #[test]
    fn normalization_is_idempotent(raw in raw_name()) {
        for aliases in [AliasTable::new(), berkeley_aliases()] {
            let once = normalize_institution(&raw, &aliases).unwrap();
            let twice = normalize_institution(&once, &aliases).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert!(!once.contains(['\t', '|', ';']));
        }
    }

    #[test]
    fn alias_key_is_stable(raw in "\\PC{0,30}") {
        let k = alias_key(&raw);
        prop_assert_eq!(alias_key(&k), k);
    }

    #[test]
    fn records_are_conserved(seed in 0u64..500, garbage in 0usize..5) {
        let mut text = generate_text(&small_synth(seed));
        for g in 0..garbage {
            text.push_str(&format!("bad{g}\tnot-a-date\tX\t\n"));
        }
        let out = ingest_records(text.as_bytes(), &berkeley_aliases()).unwrap();
        let r = &out.report;
        prop_assert_eq!(r.records_in, r.records_kept + r.dropped());
        prop_assert_eq!(r.records_kept, out.records.len());
        prop_assert!(r.incomplete >= garbage);
        prop_assert!(out.records.iter().all(|rec| !rec.institution_ids().is_empty()));
    }

    #[test]
    fn nested_windows_give_nested_slices(seed in 0u64..500, a in 1990i32..2001, b in 1990i32..2001, c in 1990i32..2001, d in 1990i32..2001) {
        let mut ys = [a, b, c, d];
        ys.sort();
        let outer = TimeWindow::new(ys[0], ys[3]).unwrap();
        let inner = TimeWindow::new(ys[1], ys[2]).unwrap();
        prop_assert!(outer.contains_window(&inner));

        let f = apply_filters(generate(&small_synth(seed)), &AliasTable::new());
        let corpus = Corpus::new(f.records, f.registry);
        let so = corpus.slice(outer);
        let si = corpus.slice(inner);
        let papers = |s: &iprank::ingest::CorpusSlice| s.in_window_papers().iter().cloned().collect::<HashSet<_>>();
        let insts = |s: &iprank::ingest::CorpusSlice| s.institutions.iter().map(|i| i.canonical_id).collect::<HashSet<_>>();
        let cites = |s: &iprank::ingest::CorpusSlice| s.citations().map(|(a, b)| (a.to_string(), b.to_string())).collect::<HashSet<_>>();
        prop_assert!(papers(&si).is_subset(&papers(&so)));
        prop_assert!(insts(&si).is_subset(&insts(&so)));
        prop_assert!(cites(&si).is_subset(&cites(&so)));
        for s in [&so, &si] {
            prop_assert!(s.in_window_papers().iter().all(|p| s.window.unwrap().contains(corpus.get(p).unwrap().year())));
        }
    }
}
