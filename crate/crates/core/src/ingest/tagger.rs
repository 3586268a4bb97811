//! Small deterministic fallback POS tagger.
//!
//! Rule order per token: numeric, all-caps acronym, lexicon, hyphenated
//! compound, capitalized non-initial word, suffix rule, default tag.

use std::collections::HashMap;

use thiserror::Error;

use crate::model::{is_noun_tag, is_valid_pos};

const DEFAULT_LEXICON: &str = include_str!("../../data/lexicon.tsv");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("lexicon line {0}: expected `WORD<TAB>TAG`")]
    Malformed(usize),
    #[error("lexicon line {line}: invalid tag {tag:?}")]
    BadTag { line: usize, tag: String },
    #[error("default tag {0:?} is not a noun tag")]
    DefaultNotNoun(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggerLexicon {
    words: HashMap<String, String>,
    /// Sorted longest suffix first.
    suffixes: Vec<(String, String)>,
    default_tag: String,
}

impl Default for TaggerLexicon {
    fn default() -> Self {
        TaggerLexicon::parse(DEFAULT_LEXICON).expect("shipped lexicon parses")
    }
}

impl TaggerLexicon {
    /// Parses `WORD<TAB>TAG` lines. `-suffix<TAB>TAG` declares a suffix rule,
    /// `!default<TAB>TAG` the fallback tag; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut words = HashMap::new();
        let mut suffixes = Vec::new();
        let mut default_tag = "NN".to_string();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, tag) = line.split_once('\t').ok_or(LexiconError::Malformed(line_no))?;
            let tag = tag.trim();
            if key.is_empty() {
                return Err(LexiconError::Malformed(line_no));
            }
            if !is_valid_pos(tag) {
                return Err(LexiconError::BadTag { line: line_no, tag: tag.to_string() });
            }
            if key == "!default" {
                default_tag = tag.to_string();
            } else if key.len() > 1 && key.starts_with('-') && key[1..].chars().all(char::is_alphabetic) {
                suffixes.push((key[1..].to_lowercase(), tag.to_string()));
            } else {
                words.insert(key.to_lowercase(), tag.to_string());
            }
        }
        if !is_noun_tag(&default_tag) {
            return Err(LexiconError::DefaultNotNoun(default_tag));
        }
        suffixes.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        Ok(TaggerLexicon { words, suffixes, default_tag })
    }

    pub fn lookup(&self, word: &str) -> Option<&str> {
        self.words.get(&word.to_lowercase()).map(String::as_str)
    }

    fn suffix_tag(&self, word: &str) -> Option<&str> {
        let lower = word.to_lowercase();
        self.suffixes
            .iter()
            // keep a stem of at least two characters
            .find(|(s, _)| lower.len() >= s.len() + 2 && lower.ends_with(s.as_str()))
            .map(|(_, t)| t.as_str())
    }

    pub fn default_tag(&self) -> &str {
        &self.default_tag
    }
}

/// Tags one sentence; `tokens[0]` is treated as sentence-initial.
pub fn tag<S: AsRef<str>>(tokens: &[S], lexicon: &TaggerLexicon) -> Vec<String> {
    tokens.iter().enumerate().map(|(i, t)| tag_word(t.as_ref(), i == 0, lexicon).to_string()).collect()
}

fn tag_word<'a>(word: &str, initial: bool, lex: &'a TaggerLexicon) -> &'a str {
    if is_numeric(word) {
        return "CD";
    }
    if is_acronym(word) {
        return "NNP";
    }
    let proper = !initial && starts_upper(word);
    if let Some(t) = lex.lookup(word) {
        // capitalized content words mid-sentence are names ("Sensata Technologies")
        let open_class = is_noun_tag(t) || t == "JJ" || t.starts_with("VB");
        return if proper && open_class { proper_tag(word) } else { t };
    }
    if let Some((head, last)) = word.split_once('-').map(|(h, _)| (h, word.rsplit('-').next().unwrap())) {
        if !head.is_empty() && !last.is_empty() {
            if starts_upper(word) && !initial || word.chars().skip(1).any(char::is_uppercase) {
                return "NNP";
            }
            if lex.lookup(head) == Some("JJ") || (last.ends_with("ed") && last.len() > 3) {
                return "JJ";
            }
            if let Some(t) = lex.lookup(last).or_else(|| lex.suffix_tag(last)) {
                return t;
            }
            return lex.default_tag();
        }
    }
    if proper {
        return proper_tag(word);
    }
    if let Some(t) = lex.suffix_tag(word) {
        return t;
    }
    lex.default_tag()
}

fn proper_tag(word: &str) -> &'static str {
    let lower = word.to_lowercase();
    if lower.len() > 3 && lower.ends_with('s') && !lower.ends_with("ss") {
        "NNPS"
    } else {
        "NNP"
    }
}

fn starts_upper(word: &str) -> bool {
    word.chars().next().is_some_and(char::is_uppercase)
}

fn is_numeric(word: &str) -> bool {
    let digits = word.trim_start_matches(['+', '-']);
    !digits.is_empty()
        && digits.chars().next().is_some_and(|c| c.is_ascii_digit())
        && digits.chars().all(|c| c.is_ascii_digit() || c == ',' || c == '.')
}

fn is_acronym(word: &str) -> bool {
    let letters = word.chars().filter(|c| c.is_alphabetic()).count();
    letters >= 2 && word.chars().all(|c| c.is_uppercase() || c.is_ascii_digit() || c == '&')
}
