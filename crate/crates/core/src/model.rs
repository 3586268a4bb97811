//! Shared data model: tokens, sentences, documents and their annotations.
//!
//! Mention spans are half-open token-index intervals. Character offsets live
//! on tokens only, so the surface string of any span is recoverable from the
//! document text.
//!
//! Invariants come in two tiers. *Structural* invariants (offsets, bounds,
//! id resolution, argument types, no crossing spans) are always enforced.
//! *Guideline* invariants (same-sentence relations, non-empty product lists,
//! noun-bearing product extents, well-formed identity chains) are enforced by
//! [`Document::attach_annotations`]; [`Document::attach_annotations_for_review`]
//! skips them so that the validator can report them instead.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Schema version written by this crate.
pub const SCHEMA_VERSION: &str = "1.0";

/// Half-open token interval `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub const fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub const fn len(&self) -> usize {
        self.end.saturating_sub(self.start)
    }

    pub const fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    /// True when `other` lies within `self` (equal spans contain each other).
    pub const fn contains(&self, other: &Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub const fn contains_index(&self, index: usize) -> bool {
        self.start <= index && index < self.end
    }

    pub const fn overlaps(&self, other: &Span) -> bool {
        self.start < other.end && other.start < self.end
    }

    /// Overlapping without either containing the other.
    pub const fn crosses(&self, other: &Span) -> bool {
        self.overlaps(other) && !self.contains(other) && !other.contains(self)
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        self.start..self.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub text: String,
    pub pos: String,
    /// Byte offset into the document text.
    pub start: usize,
    /// Exclusive byte offset.
    pub end: usize,
}

impl Token {
    pub fn new(text: impl Into<String>, pos: impl Into<String>, start: usize, end: usize) -> Self {
        Token { text: text.into(), pos: pos.into(), start, end }
    }

    pub fn is_noun(&self) -> bool {
        is_noun_tag(&self.pos)
    }
}

/// NN, NNS, NNP, NNPS.
pub fn is_noun_tag(tag: &str) -> bool {
    matches!(tag, "NN" | "NNS" | "NNP" | "NNPS")
}

/// A POS tag is non-empty, has no whitespace and no lowercase letters.
pub fn is_valid_pos(tag: &str) -> bool {
    !tag.is_empty() && !tag.chars().any(|c| c.is_whitespace() || c.is_lowercase())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sentence {
    pub index: usize,
    pub tokens: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EntityType {
    Company,
    Product,
}

impl EntityType {
    pub const ALL: [EntityType; 2] = [EntityType::Company, EntityType::Product];

    pub fn as_str(&self) -> &'static str {
        match self {
            EntityType::Company => "Company",
            EntityType::Product => "Product",
        }
    }
}

impl fmt::Display for EntityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MentionKind {
    Name,
    Nominal,
    Pronominal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    Human,
    PreAnnotation,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EntityMention {
    pub id: String,
    pub entity_type: EntityType,
    pub span: Span,
    pub kind: MentionKind,
    pub provenance: Provenance,
}

impl EntityMention {
    pub fn new(
        id: impl Into<String>,
        entity_type: EntityType,
        span: Span,
        kind: MentionKind,
        provenance: Provenance,
    ) -> Self {
        EntityMention { id: id.into(), entity_type, span, kind, provenance }
    }
}

/// A CompanyProvidesProduct relation mention.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationMention {
    pub id: String,
    pub company: String,
    pub products: Vec<String>,
    pub trigger: Option<Span>,
    pub provenance: Provenance,
    pub pattern_id: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityChain {
    pub id: String,
    pub source: String,
    pub targets: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("token {index} overlaps or precedes the previous token")]
    OverlappingTokens { index: usize },
    #[error("token {index} has offsets outside the document text")]
    OffsetOutOfBounds { index: usize },
    #[error("token {index} text does not match the document text at its offsets")]
    TokenTextMismatch { index: usize },
    #[error("token {index} has an invalid POS tag {pos:?}")]
    InvalidPos { index: usize, pos: String },
    #[error("sentence {index} does not continue the token partition")]
    NonPartitioningSentences { index: usize },
    #[error("duplicate id {id:?}")]
    DuplicateId { id: String },
    #[error("mention {id} has an empty or out-of-bounds span {span}")]
    SpanOutOfBounds { id: String, span: Span },
    #[error("{id} spans more than one sentence")]
    SpanCrossesSentence { id: String },
    #[error("mentions {first} and {second} overlap without containment")]
    CrossingMentions { first: String, second: String },
    #[error("{owner} refers to unknown mention {id:?}")]
    UnknownMention { owner: String, id: String },
    #[error("{owner} expects a {expected} mention but {id} is not one")]
    WrongArgumentType { owner: String, id: String, expected: EntityType },
    #[error("relation {id} has no product arguments")]
    EmptyProductList { id: String },
    #[error("product mention {id} contains no noun")]
    ProductWithoutNoun { id: String },
    #[error("chain {chain} has no targets")]
    EmptyChainTargets { chain: String },
    #[error("chain {chain} source {source_id} is not a name mention")]
    NonNameChainSource { chain: String, source_id: String },
    #[error("mention {id} belongs to more than one chain position")]
    DuplicateChainMembership { id: String },
    #[error("duplicate document id {doc_id:?}")]
    DuplicateDocument { doc_id: String },
}

/// A tokenized, tagged document with its annotation layers.
///
/// Values are immutable once built; construct them with [`Document::new`]
/// and [`Document::attach_annotations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    doc_id: String,
    text: String,
    tokens: Vec<Token>,
    sentences: Vec<Sentence>,
    entities: Vec<EntityMention>,
    relations: Vec<RelationMention>,
    chains: Vec<IdentityChain>,
}

impl Document {
    /// Builds an unannotated document. `sentences` are token ranges that must
    /// partition `tokens` in order.
    pub fn new(
        doc_id: impl Into<String>,
        text: impl Into<String>,
        tokens: Vec<Token>,
        sentences: Vec<Span>,
    ) -> Result<Self, ModelError> {
        let text = text.into();
        let mut prev_end = 0;
        for (index, token) in tokens.iter().enumerate() {
            if token.start >= token.end || token.end > text.len() {
                return Err(ModelError::OffsetOutOfBounds { index });
            }
            if index > 0 && token.start < prev_end {
                return Err(ModelError::OverlappingTokens { index });
            }
            if text.get(token.start..token.end) != Some(token.text.as_str()) {
                return Err(ModelError::TokenTextMismatch { index });
            }
            if !is_valid_pos(&token.pos) {
                return Err(ModelError::InvalidPos { index, pos: token.pos.clone() });
            }
            prev_end = token.end;
        }

        let mut next = 0;
        for (index, span) in sentences.iter().enumerate() {
            if span.start != next || span.is_empty() || span.end > tokens.len() {
                return Err(ModelError::NonPartitioningSentences { index });
            }
            next = span.end;
        }
        if next != tokens.len() {
            return Err(ModelError::NonPartitioningSentences { index: sentences.len() });
        }

        Ok(Document {
            doc_id: doc_id.into(),
            text,
            tokens,
            sentences: sentences.into_iter().enumerate().map(|(index, tokens)| Sentence { index, tokens }).collect(),
            entities: Vec::new(),
            relations: Vec::new(),
            chains: Vec::new(),
        })
    }

    /// Replaces the annotation layers, enforcing every invariant.
    pub fn attach_annotations(
        &self,
        entities: Vec<EntityMention>,
        relations: Vec<RelationMention>,
        chains: Vec<IdentityChain>,
    ) -> Result<Document, ModelError> {
        let doc = self.attach_annotations_for_review(entities, relations, chains)?;
        doc.check_guidelines()?;
        Ok(doc)
    }

    /// Replaces the annotation layers, enforcing structural invariants only.
    /// Guideline breaches are left for the validator to report.
    pub fn attach_annotations_for_review(
        &self,
        entities: Vec<EntityMention>,
        relations: Vec<RelationMention>,
        chains: Vec<IdentityChain>,
    ) -> Result<Document, ModelError> {
        let doc = Document {
            doc_id: self.doc_id.clone(),
            text: self.text.clone(),
            tokens: self.tokens.clone(),
            sentences: self.sentences.clone(),
            entities,
            relations,
            chains,
        };
        doc.check_structure()?;
        Ok(doc)
    }

    fn check_structure(&self) -> Result<(), ModelError> {
        let mut ids = HashSet::new();
        let mut claim = |id: &str| {
            if ids.insert(id.to_string()) {
                Ok(())
            } else {
                Err(ModelError::DuplicateId { id: id.to_string() })
            }
        };

        for m in &self.entities {
            claim(&m.id)?;
            if m.span.is_empty() || m.span.end > self.tokens.len() {
                return Err(ModelError::SpanOutOfBounds { id: m.id.clone(), span: m.span });
            }
            if self.sentence_of_span(m.span).is_none() {
                return Err(ModelError::SpanCrossesSentence { id: m.id.clone() });
            }
        }
        for (i, a) in self.entities.iter().enumerate() {
            for b in &self.entities[i + 1..] {
                if a.span.crosses(&b.span) {
                    return Err(ModelError::CrossingMentions { first: a.id.clone(), second: b.id.clone() });
                }
            }
        }

        let by_id = self.mention_index();
        for r in &self.relations {
            claim(&r.id)?;
            self.expect_type(&by_id, &r.id, &r.company, EntityType::Company)?;
            for p in &r.products {
                self.expect_type(&by_id, &r.id, p, EntityType::Product)?;
            }
            if let Some(t) = r.trigger {
                if t.is_empty() || t.end > self.tokens.len() {
                    return Err(ModelError::SpanOutOfBounds { id: r.id.clone(), span: t });
                }
            }
        }
        for c in &self.chains {
            claim(&c.id)?;
            for m in std::iter::once(&c.source).chain(&c.targets) {
                if !by_id.contains_key(m.as_str()) {
                    return Err(ModelError::UnknownMention { owner: c.id.clone(), id: m.clone() });
                }
            }
        }
        Ok(())
    }

    fn expect_type(
        &self,
        by_id: &HashMap<&str, &EntityMention>,
        owner: &str,
        id: &str,
        expected: EntityType,
    ) -> Result<(), ModelError> {
        match by_id.get(id) {
            None => Err(ModelError::UnknownMention { owner: owner.to_string(), id: id.to_string() }),
            Some(m) if m.entity_type != expected => {
                Err(ModelError::WrongArgumentType { owner: owner.to_string(), id: id.to_string(), expected })
            }
            Some(_) => Ok(()),
        }
    }

    fn check_guidelines(&self) -> Result<(), ModelError> {
        for m in &self.entities {
            if m.entity_type == EntityType::Product
                && m.kind != MentionKind::Pronominal
                && !self.tokens[m.span.indices()].iter().any(Token::is_noun)
            {
                return Err(ModelError::ProductWithoutNoun { id: m.id.clone() });
            }
        }
        let by_id = self.mention_index();
        for r in &self.relations {
            if r.products.is_empty() {
                return Err(ModelError::EmptyProductList { id: r.id.clone() });
            }
            if self.relation_sentences(r, &by_id).len() > 1 {
                return Err(ModelError::SpanCrossesSentence { id: r.id.clone() });
            }
        }
        let mut seen = HashSet::new();
        for c in &self.chains {
            if c.targets.is_empty() {
                return Err(ModelError::EmptyChainTargets { chain: c.id.clone() });
            }
            if by_id[c.source.as_str()].kind != MentionKind::Name {
                return Err(ModelError::NonNameChainSource { chain: c.id.clone(), source_id: c.source.clone() });
            }
            for m in std::iter::once(&c.source).chain(&c.targets) {
                if !seen.insert(m.as_str()) {
                    return Err(ModelError::DuplicateChainMembership { id: m.clone() });
                }
            }
        }
        Ok(())
    }

    /// Distinct sentence indices touched by a relation's arguments and trigger.
    pub(crate) fn relation_sentences(&self, r: &RelationMention, by_id: &HashMap<&str, &EntityMention>) -> Vec<usize> {
        let mut out: Vec<usize> = std::iter::once(&r.company)
            .chain(&r.products)
            .filter_map(|id| by_id.get(id.as_str()))
            .filter_map(|m| self.sentence_of_span(m.span))
            .collect();
        if let Some(t) = r.trigger {
            match self.sentence_of_span(t) {
                Some(s) => out.push(s),
                None => out.extend([self.sentence_of(t.start), self.sentence_of(t.end - 1)].into_iter().flatten()),
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn doc_id(&self) -> &str {
        &self.doc_id
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn sentences(&self) -> &[Sentence] {
        &self.sentences
    }

    pub fn entities(&self) -> &[EntityMention] {
        &self.entities
    }

    pub fn relations(&self) -> &[RelationMention] {
        &self.relations
    }

    pub fn chains(&self) -> &[IdentityChain] {
        &self.chains
    }

    pub fn sentence_tokens(&self, sentence: &Sentence) -> &[Token] {
        &self.tokens[sentence.tokens.indices()]
    }

    pub fn entity(&self, id: &str) -> Option<&EntityMention> {
        self.entities.iter().find(|m| m.id == id)
    }

    pub fn mention_index(&self) -> HashMap<&str, &EntityMention> {
        self.entities.iter().map(|m| (m.id.as_str(), m)).collect()
    }

    /// Sentence index containing token `index`.
    pub fn sentence_of(&self, index: usize) -> Option<usize> {
        let pos = self.sentences.partition_point(|s| s.tokens.end <= index);
        self.sentences.get(pos).filter(|s| s.tokens.contains_index(index)).map(|s| s.index)
    }

    /// Sentence index containing the whole span, if any.
    pub fn sentence_of_span(&self, span: Span) -> Option<usize> {
        if span.is_empty() {
            return None;
        }
        let s = self.sentence_of(span.start)?;
        self.sentences[s].tokens.contains(&span).then_some(s)
    }

    /// Exact surface string of a span, taken from the document text.
    pub fn surface(&self, span: Span) -> &str {
        if span.is_empty() || span.end > self.tokens.len() {
            return "";
        }
        &self.text[self.tokens[span.start].start..self.tokens[span.end - 1].end]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    schema_version: String,
    documents: Vec<Document>,
}

impl Corpus {
    pub fn new(documents: Vec<Document>) -> Result<Self, ModelError> {
        Self::with_version(SCHEMA_VERSION, documents)
    }

    pub fn with_version(schema_version: impl Into<String>, documents: Vec<Document>) -> Result<Self, ModelError> {
        let mut seen = HashSet::new();
        for d in &documents {
            if !seen.insert(d.doc_id()) {
                return Err(ModelError::DuplicateDocument { doc_id: d.doc_id().to_string() });
            }
        }
        Ok(Corpus { schema_version: schema_version.into(), documents })
    }

    pub fn schema_version(&self) -> &str {
        &self.schema_version
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn into_documents(self) -> Vec<Document> {
        self.documents
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bmw() -> Document {
        Document::new(
            "d1",
            "BMW's Z3",
            vec![Token::new("BMW", "NNP", 0, 3), Token::new("'s", "POS", 3, 5), Token::new("Z3", "NNP", 6, 8)],
            vec![Span::new(0, 3)],
        )
        .unwrap()
    }

    fn two_sentences() -> Document {
        Document::new(
            "d4",
            "Acme works. It sells tools.",
            vec![
                Token::new("Acme", "NNP", 0, 4),
                Token::new("works", "VBZ", 5, 10),
                Token::new(".", ".", 10, 11),
                Token::new("It", "PRP", 12, 14),
                Token::new("sells", "VBZ", 15, 20),
                Token::new("tools", "NNS", 21, 26),
                Token::new(".", ".", 26, 27),
            ],
            vec![Span::new(0, 3), Span::new(3, 7)],
        )
        .unwrap()
    }

    fn company(id: &str, s: usize, e: usize) -> EntityMention {
        EntityMention::new(id, EntityType::Company, Span::new(s, e), MentionKind::Name, Provenance::Human)
    }

    fn product(id: &str, s: usize, e: usize) -> EntityMention {
        EntityMention::new(id, EntityType::Product, Span::new(s, e), MentionKind::Name, Provenance::Human)
    }

    fn relation(id: &str, company: &str, products: &[&str]) -> RelationMention {
        RelationMention {
            id: id.into(),
            company: company.into(),
            products: products.iter().map(|p| p.to_string()).collect(),
            trigger: None,
            provenance: Provenance::Human,
            pattern_id: None,
        }
    }

    #[test]
    fn builds_possessive_document() {
        let d = bmw();
        assert_eq!(d.tokens().len(), 3);
        assert_eq!(d.sentences().len(), 1);
        assert!(d.entities().is_empty());
        assert_eq!(d.surface(Span::new(0, 2)), "BMW's");
    }

    #[test]
    fn empty_document_is_accepted() {
        let d = Document::new("d2", "", vec![], vec![]).unwrap();
        assert!(d.tokens().is_empty());
    }

    #[test]
    fn rejects_offsets_past_text() {
        let err = Document::new("d3", "ab", vec![Token::new("abc", "NN", 0, 3)], vec![Span::new(0, 1)]).unwrap_err();
        assert_eq!(err, ModelError::OffsetOutOfBounds { index: 0 });
    }

    #[test]
    fn rejects_overlapping_tokens_and_bad_partition() {
        let toks = vec![Token::new("ab", "NN", 0, 2), Token::new("b", "NN", 1, 2)];
        assert_eq!(
            Document::new("x", "ab", toks, vec![Span::new(0, 2)]).unwrap_err(),
            ModelError::OverlappingTokens { index: 1 }
        );
        let toks = vec![Token::new("a", "DT", 0, 1), Token::new("b", "NN", 2, 3)];
        assert_eq!(
            Document::new("x", "a b", toks.clone(), vec![Span::new(0, 1)]).unwrap_err(),
            ModelError::NonPartitioningSentences { index: 1 }
        );
        assert_eq!(
            Document::new("x", "a b", toks, vec![Span::new(0, 1), Span::new(2, 2)]).unwrap_err(),
            ModelError::NonPartitioningSentences { index: 1 }
        );
    }

    #[test]
    fn rejects_lowercase_pos() {
        let err = Document::new("x", "a", vec![Token::new("a", "dt", 0, 1)], vec![Span::new(0, 1)]).unwrap_err();
        assert!(matches!(err, ModelError::InvalidPos { index: 0, .. }));
    }

    #[test]
    fn relation_across_sentences_is_rejected() {
        let d = two_sentences();
        let err = d
            .attach_annotations(vec![company("c", 0, 1), product("p", 5, 6)], vec![relation("r", "c", &["p"])], vec![])
            .unwrap_err();
        assert_eq!(err, ModelError::SpanCrossesSentence { id: "r".into() });
        // review mode keeps it for the validator
        assert!(d
            .attach_annotations_for_review(
                vec![company("c", 0, 1), product("p", 5, 6)],
                vec![relation("r", "c", &["p"])],
                vec![],
            )
            .is_ok());
    }

    #[test]
    fn pronominal_chain_source_is_rejected() {
        let d = two_sentences();
        let it =
            EntityMention::new("it", EntityType::Company, Span::new(3, 4), MentionKind::Pronominal, Provenance::Human);
        let err = d
            .attach_annotations(
                vec![company("c", 0, 1), it],
                vec![],
                vec![IdentityChain { id: "ch".into(), source: "it".into(), targets: vec!["c".into()] }],
            )
            .unwrap_err();
        assert!(matches!(err, ModelError::NonNameChainSource { .. }));
    }

    #[test]
    fn empty_product_list_is_rejected() {
        let d = bmw();
        let err = d.attach_annotations(vec![company("c", 0, 1)], vec![relation("r", "c", &[])], vec![]).unwrap_err();
        assert_eq!(err, ModelError::EmptyProductList { id: "r".into() });
    }

    #[test]
    fn duplicate_chain_membership_is_rejected() {
        let d = two_sentences();
        let chains = vec![
            IdentityChain { id: "a".into(), source: "c".into(), targets: vec!["d".into()] },
            IdentityChain { id: "b".into(), source: "c".into(), targets: vec!["e".into()] },
        ];
        let err = d
            .attach_annotations(vec![company("c", 0, 1), company("d", 3, 4), company("e", 5, 6)], vec![], chains)
            .unwrap_err();
        assert_eq!(err, ModelError::DuplicateChainMembership { id: "c".into() });
    }

    #[test]
    fn nested_company_in_product_is_legal_but_crossing_is_not() {
        let d = bmw();
        assert!(d.attach_annotations(vec![company("c", 0, 1), product("p", 0, 3)], vec![], vec![]).is_ok());
        let err = d.attach_annotations(vec![company("c", 0, 2), product("p", 1, 3)], vec![], vec![]).unwrap_err();
        assert!(matches!(err, ModelError::CrossingMentions { .. }));
    }

    #[test]
    fn product_needs_a_noun_and_relations_need_known_ids() {
        let d = two_sentences();
        let verb =
            EntityMention::new("p", EntityType::Product, Span::new(1, 2), MentionKind::Nominal, Provenance::Human);
        assert_eq!(
            d.attach_annotations(vec![verb], vec![], vec![]).unwrap_err(),
            ModelError::ProductWithoutNoun { id: "p".into() }
        );
        let err =
            d.attach_annotations(vec![company("c", 0, 1)], vec![relation("r", "c", &["nope"])], vec![]).unwrap_err();
        assert!(matches!(err, ModelError::UnknownMention { .. }));
        let err = d.attach_annotations(vec![company("c", 0, 1)], vec![relation("r", "c", &["c"])], vec![]).unwrap_err();
        assert!(matches!(err, ModelError::WrongArgumentType { .. }));
    }

    #[test]
    fn sentence_lookup() {
        let d = two_sentences();
        assert_eq!(d.sentence_of(2), Some(0));
        assert_eq!(d.sentence_of(3), Some(1));
        assert_eq!(d.sentence_of(7), None);
        assert_eq!(d.sentence_of_span(Span::new(2, 4)), None);
    }

    #[test]
    fn duplicate_doc_ids_rejected() {
        let err = Corpus::new(vec![bmw(), bmw()]).unwrap_err();
        assert!(matches!(err, ModelError::DuplicateDocument { .. }));
    }

    mod props {
        use super::super::Span;
        use proptest::prelude::*;

        fn span() -> impl Strategy<Value = Span> {
            (0usize..20, 1usize..6).prop_map(|(s, l)| Span::new(s, s + l))
        }

        proptest! {
            #[test]
            fn overlap_is_symmetric(a in span(), b in span()) {
                prop_assert_eq!(a.overlaps(&b), b.overlaps(&a));
                prop_assert_eq!(a.crosses(&b), b.crosses(&a));
            }

            #[test]
            fn containment_is_antisymmetric(a in span(), b in span()) {
                if a.contains(&b) && b.contains(&a) {
                    prop_assert_eq!(a, b);
                }
                if a.contains(&b) {
                    prop_assert!(!a.crosses(&b));
                }
            }
        }
    }
}
