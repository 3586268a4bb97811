//! Bootstrap patterns: declaration, expansion and matching.

pub mod config;
pub mod expand;
pub mod inflect;
pub mod matcher;
pub mod relations;

pub use config::{parse_config, BasePattern, ConfigError, Element, PatternConfig, Phrase};
pub use expand::{expand, SurfaceElement, SurfacePattern};
pub use matcher::{match_sentence, PatternMatch, NESTED_PATTERN_ID};
pub use relations::{dedup, expand_triggers, fan_out_triggers, resolve_acronyms, RelationDraft};

/// The shipped pattern set.
pub const DEFAULT_CONFIG: &str = include_str!("../../data/default.pat");

pub fn default_config() -> PatternConfig {
    parse_config(DEFAULT_CONFIG).expect("shipped pattern config parses")
}
