//! Executable theorem checks over single semigroups and corpora.

mod corpus;
mod theorems;

pub use corpus::{
    replay, run_corpus, CorpusRecord, CorpusSource, CorpusSpec, CorpusSummary, Counterexample,
    Slice, Tally,
};
pub use theorems::{
    check_ids, check_theorems, CheckInfo, CheckStatus, TheoremCheck, TheoremReport, CHECKS,
    PERFECT_BY_DEFINITION_LIMIT,
};
