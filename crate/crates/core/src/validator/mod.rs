//! Guideline checks over annotated documents.

mod report;

pub use report::{exit_code, report, ReportFormat, UnknownFormat};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::model::{Corpus, Document, EntityMention, EntityType, MentionKind, Span, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    V1,
    V2,
    V3,
    V4,
    V5,
    V6,
    V7,
    V8,
    V9,
}

impl RuleId {
    pub const ALL: [RuleId; 9] =
        [RuleId::V1, RuleId::V2, RuleId::V3, RuleId::V4, RuleId::V5, RuleId::V6, RuleId::V7, RuleId::V8, RuleId::V9];

    pub fn severity(self) -> Severity {
        match self {
            RuleId::V5 | RuleId::V8 => Severity::Warning,
            _ => Severity::Error,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub rule_id: RuleId,
    pub severity: Severity,
    pub doc_id: String,
    /// Id of the offending mention, relation or chain.
    pub target: String,
    pub span: Span,
    pub message: String,
}

impl Violation {
    fn sort_key(&self) -> (&str, usize, usize, Severity, RuleId, &str) {
        (&self.doc_id, self.span.start, self.span.end, self.severity, self.rule_id, &self.target)
    }
}

/// Lowercase adjectives that do not make a product type more specific.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjectiveStoplist {
    words: BTreeSet<String>,
}

const DEFAULT_STOPLIST: &str = include_str!("../../data/stoplist.txt");

impl Default for AdjectiveStoplist {
    fn default() -> Self {
        Self::parse(DEFAULT_STOPLIST)
    }
}

impl AdjectiveStoplist {
    /// One word per line; `#` starts a comment line.
    pub fn parse(text: &str) -> Self {
        let mut s = AdjectiveStoplist { words: BTreeSet::new() };
        s.extend(text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')));
        s
    }

    pub fn extend<I: IntoIterator<Item = S>, S: AsRef<str>>(&mut self, words: I) {
        self.words.extend(words.into_iter().map(|w| w.as_ref().to_lowercase()));
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(&word.to_lowercase())
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

struct Checker<'a> {
    doc: &'a Document,
    by_id: HashMap<&'a str, &'a EntityMention>,
    out: Vec<Violation>,
}

impl<'a> Checker<'a> {
    fn push(&mut self, rule: RuleId, target: &str, span: Span, message: String) {
        self.out.push(Violation {
            rule_id: rule,
            severity: rule.severity(),
            doc_id: self.doc.doc_id().to_string(),
            target: target.to_string(),
            span,
            message,
        });
    }

    fn tokens(&self, span: Span) -> &'a [Token] {
        &self.doc.tokens()[span.indices()]
    }

    fn products(&self) -> impl Iterator<Item = &'a EntityMention> {
        self.doc.entities().iter().filter(|m| m.entity_type == EntityType::Product)
    }

    fn span_of(&self, id: &str) -> Span {
        self.by_id.get(id).map_or(Span::new(0, 0), |m| m.span)
    }
}

fn is_boundary_word(t: &Token) -> bool {
    t.text == "," || matches!(t.pos.as_str(), "DT" | "IN" | "WDT" | "WP" | "WP$" | "CC")
}

fn is_trademark(t: &Token) -> bool {
    t.text == "®" || t.text == "™"
}

fn extent_boundaries(c: &mut Checker) {
    let products: Vec<_> = c.products().collect();
    for m in products {
        let toks = c.tokens(m.span);
        let trimmed = match toks.iter().rposition(|t| !is_trademark(t)) {
            Some(last) => &toks[..=last],
            None => continue,
        };
        let first = &trimmed[0];
        let last = &trimmed[trimmed.len() - 1];
        if is_boundary_word(first) {
            c.push(RuleId::V1, &m.id, m.span, format!("product extent begins with {:?}/{}", first.text, first.pos));
        } else if is_boundary_word(last) {
            c.push(RuleId::V1, &m.id, m.span, format!("product extent ends with {:?}/{}", last.text, last.pos));
        } else if trimmed.windows(2).any(|w| w[0].text == "," && matches!(w[1].pos.as_str(), "WDT" | "WP" | "WP$")) {
            c.push(RuleId::V1, &m.id, m.span, "product extent includes a relative clause".into());
        }
    }
}

fn possessive_inside(c: &mut Checker) {
    let products: Vec<_> = c.products().collect();
    for p in products {
        for co in c.doc.entities() {
            if co.entity_type != EntityType::Company || !p.span.contains(&co.span) || co.span.end >= p.span.end {
                continue;
            }
            if c.doc.tokens()[co.span.end].pos == "POS" {
                c.push(RuleId::V2, &p.id, p.span, format!("possessive after company {} inside product extent", co.id));
            }
        }
    }
}

fn cross_sentence(c: &mut Checker) {
    for r in c.doc.relations() {
        if c.doc.relation_sentences(r, &c.by_id).len() > 1 {
            let span = c.span_of(&r.company);
            c.push(RuleId::V3, &r.id, span, "relation arguments span more than one sentence".into());
        }
    }
}

fn chains(c: &mut Checker) {
    let mut membership: HashMap<&str, BTreeSet<&str>> = HashMap::new();
    for ch in c.doc.chains() {
        for m in std::iter::once(&ch.source).chain(&ch.targets) {
            membership.entry(m.as_str()).or_default().insert(ch.id.as_str());
        }
    }
    for ch in c.doc.chains() {
        let span = c.span_of(&ch.source);
        if let Some(src) = c.by_id.get(ch.source.as_str()) {
            if src.kind != MentionKind::Name {
                c.push(RuleId::V4, &ch.id, span, format!("chain source {} is not a name mention", ch.source));
            }
        }
        if ch.targets.is_empty() {
            c.push(RuleId::V4, &ch.id, span, "chain has no targets".into());
        }
        if ch.targets.contains(&ch.source) {
            c.push(RuleId::V4, &ch.id, span, format!("chain source {} is also a target", ch.source));
        }
        let mut seen = BTreeSet::new();
        for m in std::iter::once(&ch.source).chain(&ch.targets) {
            if membership[m.as_str()].len() > 1 && seen.insert(m) {
                c.push(RuleId::V4, &ch.id, c.span_of(m), format!("mention {m} belongs to more than one chain"));
            }
        }
    }
}

fn label_consistency(c: &mut Checker) {
    let tokens = c.doc.tokens();
    let lower: Vec<String> = tokens.iter().map(|t| t.text.to_lowercase()).collect();
    let products: Vec<_> = c.products().collect();
    let mut reported = BTreeSet::new();
    for p in &products {
        let needle = &lower[p.span.indices()];
        let n = needle.len();
        for start in 0..=lower.len().saturating_sub(n) {
            let occ = Span::new(start, start + n);
            if &lower[occ.indices()] != needle || c.doc.sentence_of_span(occ).is_none() {
                continue;
            }
            if products.iter().any(|q| q.span.contains(&occ)) || !reported.insert(occ) {
                continue;
            }
            c.push(
                RuleId::V5,
                &p.id,
                occ,
                format!("{:?} is labeled as a product elsewhere ({}) but not here", c.doc.surface(occ), p.id),
            );
        }
    }
}

type RelationShape = (Vec<Span>, Option<Span>);

fn acronym_duplicates(c: &mut Checker) {
    for ch in c.doc.chains() {
        let members: BTreeSet<&str> = std::iter::once(&ch.source).chain(&ch.targets).map(String::as_str).collect();
        // (sorted product spans, trigger) -> (company, relation)
        let mut first: HashMap<RelationShape, (&str, &str)> = HashMap::new();
        for r in c.doc.relations() {
            if !members.contains(r.company.as_str()) {
                continue;
            }
            let mut products: Vec<Span> = r.products.iter().map(|p| c.span_of(p)).collect();
            products.sort();
            match first.get(&(products.clone(), r.trigger)) {
                Some(&(company, rel)) if company != r.company => {
                    let span = c.span_of(&r.company);
                    c.push(
                        RuleId::V6,
                        &r.id,
                        span,
                        format!("relation duplicates {rel} on identity-linked company {company}"),
                    );
                }
                Some(_) => {}
                None => {
                    first.insert((products, r.trigger), (r.company.as_str(), r.id.as_str()));
                }
            }
        }
    }
}

fn noun_required(c: &mut Checker) {
    let products: Vec<_> = c.products().collect();
    for m in products {
        if m.kind != MentionKind::Pronominal && !c.tokens(m.span).iter().any(Token::is_noun) {
            c.push(RuleId::V7, &m.id, m.span, "product extent contains no noun".into());
        }
    }
}

fn stoplist_adjective(c: &mut Checker, stoplist: &AdjectiveStoplist) {
    let products: Vec<_> = c.products().collect();
    for m in products {
        let first = &c.tokens(m.span)[0];
        if stoplist.contains(&first.text) {
            c.push(
                RuleId::V8,
                &m.id,
                m.span,
                format!("product extent begins with non-distinctive adjective {:?}", first.text),
            );
        }
    }
}

fn relation_shape(c: &mut Checker) {
    for r in c.doc.relations() {
        let span = c.span_of(&r.company);
        if r.products.is_empty() {
            c.push(RuleId::V9, &r.id, span, "relation has no products".into());
        }
        if let Some(t) = r.trigger {
            if c.tokens(t).iter().any(|tok| tok.text == "," || tok.pos == "CC") {
                c.push(RuleId::V9, &r.id, t, "relation has more than one trigger".into());
            }
        }
    }
}

/// Applies every rule to one document. Output is sorted by position,
/// then severity, then rule.
pub fn validate(doc: &Document, stoplist: &AdjectiveStoplist) -> Vec<Violation> {
    let mut c = Checker { doc, by_id: doc.mention_index(), out: Vec::new() };
    extent_boundaries(&mut c);
    possessive_inside(&mut c);
    cross_sentence(&mut c);
    chains(&mut c);
    label_consistency(&mut c);
    acronym_duplicates(&mut c);
    noun_required(&mut c);
    stoplist_adjective(&mut c, stoplist);
    relation_shape(&mut c);
    let mut out = c.out;
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Validates every document; output is grouped by doc_id ascending.
pub fn validate_corpus(corpus: &Corpus, stoplist: &AdjectiveStoplist) -> Vec<Violation> {
    let mut out: Vec<Violation> = corpus.documents().iter().flat_map(|d| validate(d, stoplist)).collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}
