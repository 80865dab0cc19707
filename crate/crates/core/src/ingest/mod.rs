//! Record parsing, institution normalization, filtering and time slicing.

mod filter;
mod normalize;
mod record;
mod slice;
mod store;

pub use filter::{
    apply_filters, ingest_records, CanonicalInstitution, CleanRecord, FilterReport,
    FilteredCorpus, InstitutionRegistry,
};
pub use normalize::{alias_key, normalize_institution, AliasTable};
pub use record::{parse_line, parse_records, AuthorEntry, BibRecord, ParseOutcome, RecordError};
pub use slice::{corpus_stats, Corpus, CorpusSlice, SliceInstitution, StatsSummary, TimeWindow};
pub use store::{read_clean_corpus, write_clean_corpus, CLEAN_HEADER};

/// Slices `corpus` to `window`. Free-function form of [`Corpus::slice`].
pub fn slice_window(corpus: &Corpus, window: TimeWindow) -> CorpusSlice {
    corpus.slice(window)
}
