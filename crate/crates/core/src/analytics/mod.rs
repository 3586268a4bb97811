//! Corpus statistics, inter-annotator agreement and pattern yield.

mod agreement;
mod stats;
mod yields;

pub use agreement::{agreement, corpus_agreement, AgreementError, AgreementScores, Confusion, MatchCounts};
pub use stats::{is_word, stats, CorpusStats, Mean, StatsError, Totals};
pub use yields::{corpus_pattern_yield, pattern_yield, PatternYield, YieldRow};
