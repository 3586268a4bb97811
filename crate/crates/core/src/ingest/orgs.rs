//! Deterministic company recognizer: gazetteer lookup plus legal-suffix runs.

use std::collections::{BTreeSet, HashMap};

use crate::ingest::tokenize::tokenize;
use crate::model::{Document, EntityMention, EntityType, MentionKind, Provenance, Span, Token};

const DEFAULT_SUFFIXES: &str = include_str!("../../data/legal_suffixes.txt");

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrgGazetteer {
    /// Keyed by the lowercased first token.
    entries: HashMap<String, Vec<Vec<String>>>,
    suffixes: BTreeSet<String>,
}

impl OrgGazetteer {
    /// Empty gazetteer with the shipped legal suffixes.
    pub fn with_default_suffixes() -> Self {
        OrgGazetteer { suffixes: parse_lines(DEFAULT_SUFFIXES).map(str::to_string).collect(), ..Default::default() }
    }

    /// Parses a gazetteer file (one name per line, `#` comments) on top of
    /// the default suffixes.
    pub fn parse(text: &str) -> Self {
        let mut g = Self::with_default_suffixes();
        for line in parse_lines(text) {
            g.add_name(line);
        }
        g
    }

    pub fn add_name(&mut self, name: &str) {
        let toks: Vec<String> = tokenize(name).into_iter().map(|t| t.text.to_lowercase()).collect();
        if let Some(first) = toks.first() {
            let list = self.entries.entry(first.clone()).or_default();
            if !list.contains(&toks) {
                list.push(toks);
            }
        }
    }

    pub fn set_suffixes<I: IntoIterator<Item = S>, S: Into<String>>(&mut self, suffixes: I) {
        self.suffixes = suffixes.into_iter().map(Into::into).filter(|s: &String| !s.is_empty()).collect();
    }

    pub fn suffixes(&self) -> impl Iterator<Item = &str> {
        self.suffixes.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn longest_entry_at(&self, tokens: &[Token], at: usize) -> Option<usize> {
        let first = &tokens[at].text;
        if first.chars().all(|c| !c.is_uppercase()) {
            return None;
        }
        self.entries
            .get(&first.to_lowercase())?
            .iter()
            .filter(|e| {
                at + e.len() <= tokens.len() && e.iter().zip(&tokens[at..]).all(|(w, t)| t.text.to_lowercase() == *w)
            })
            .map(Vec::len)
            .max()
    }
}

fn parse_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn is_capitalized_proper(t: &Token, initial: bool) -> bool {
    // sentence-initial capitals say nothing, so a common-noun tag there is
    // tolerated ("Sensata Technologies Holding")
    let proper = matches!(t.pos.as_str(), "NNP" | "NNPS") || (initial && t.pos == "NN");
    proper && t.text.chars().next().is_some_and(|c| c.is_uppercase() || c.is_ascii_digit())
}

/// Candidate company spans within one token slice (sentence), before
/// overlap resolution.
fn candidates(tokens: &[Token], gazetteer: &OrgGazetteer) -> Vec<Span> {
    let mut out = Vec::new();
    for i in 0..tokens.len() {
        if let Some(len) = gazetteer.longest_entry_at(tokens, i) {
            out.push(Span::new(i, i + len));
        }
    }
    let mut i = 0;
    while i < tokens.len() {
        if !is_capitalized_proper(&tokens[i], i == 0) {
            i += 1;
            continue;
        }
        let start = i;
        while i < tokens.len() && is_capitalized_proper(&tokens[i], i == 0) {
            i += 1;
        }
        if let Some(last) = (start + 1..i).rev().find(|&k| gazetteer.suffixes.contains(&tokens[k].text)) {
            out.push(Span::new(start, last + 1));
        }
    }
    out
}

/// Resolves overlaps longest-first, then leftmost. Output is sorted.
fn resolve(mut spans: Vec<Span>) -> Vec<Span> {
    spans.sort_by(|a, b| b.len().cmp(&a.len()).then(a.start.cmp(&b.start)));
    let mut kept: Vec<Span> = Vec::new();
    for s in spans {
        if !kept.iter().any(|k| k.overlaps(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Company spans for one sentence's tokens (indices relative to the slice).
pub fn recognize_in_sentence(tokens: &[Token], gazetteer: &OrgGazetteer) -> Vec<Span> {
    resolve(candidates(tokens, gazetteer))
}

/// Marks company mentions across a tagged document. Mention ids are
/// `org{n}` in document order; provenance is pre-annotation.
pub fn recognize_orgs(doc: &Document, gazetteer: &OrgGazetteer) -> Vec<EntityMention> {
    let mut out = Vec::new();
    for s in doc.sentences() {
        let offset = s.tokens.start;
        for span in recognize_in_sentence(doc.sentence_tokens(s), gazetteer) {
            let id = format!("org{}", out.len());
            out.push(EntityMention::new(
                id,
                EntityType::Company,
                Span::new(span.start + offset, span.end + offset),
                MentionKind::Name,
                Provenance::PreAnnotation,
            ));
        }
    }
    out
}
