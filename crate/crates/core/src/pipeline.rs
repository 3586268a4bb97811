//! End-to-end pre-annotation of one document.

use std::collections::HashSet;

use crate::chunker::chunk_sentence;
use crate::ingest::{infer_kind, recognize_orgs, OrgGazetteer};
use crate::model::{Document, EntityMention, EntityType, ModelError, Provenance, RelationMention, Span};
use crate::patterns::{
    dedup, expand, expand_triggers, match_sentence, resolve_acronyms, PatternConfig, RelationDraft, SurfacePattern,
    NESTED_PATTERN_ID,
};

/// Organization recognition, chunking and pattern matching bundled
/// together. Immutable and shareable across threads.
#[derive(Debug, Clone)]
pub struct Preannotator {
    patterns: Vec<SurfacePattern>,
    pattern_ids: Vec<String>,
    gazetteer: OrgGazetteer,
}

/// A pre-annotated document plus the relation drafts behind it.
#[derive(Debug, Clone)]
pub struct Preannotation {
    pub document: Document,
    /// Every draft before deduplication, in match order.
    pub raw: Vec<RelationDraft>,
    /// Drafts that became relations.
    pub relations: Vec<RelationDraft>,
}

struct Ids {
    used: HashSet<String>,
    next: usize,
}

impl Ids {
    fn fresh(&mut self, prefix: &str) -> String {
        loop {
            let id = format!("{prefix}{}", self.next);
            self.next += 1;
            if self.used.insert(id.clone()) {
                return id;
            }
        }
    }
}

impl Preannotator {
    pub fn new(config: &PatternConfig, gazetteer: OrgGazetteer) -> Self {
        let mut pattern_ids: Vec<String> = config.patterns.iter().map(|p| p.id.clone()).collect();
        pattern_ids.push(NESTED_PATTERN_ID.to_string());
        Preannotator { patterns: expand(config), pattern_ids, gazetteer }
    }

    pub fn surface_patterns(&self) -> &[SurfacePattern] {
        &self.patterns
    }

    /// Base pattern ids in config order, followed by the nested-rule id.
    pub fn pattern_ids(&self) -> &[String] {
        &self.pattern_ids
    }

    /// Adds company mentions, product mentions and relations to `doc`.
    /// Existing annotations are kept; recognized organizations that overlap
    /// an existing company or cross any existing mention are discarded.
    pub fn annotate(&self, doc: &Document) -> Result<Preannotation, ModelError> {
        let existing = doc.entities();
        let mut ids = Ids {
            used: existing
                .iter()
                .map(|m| m.id.clone())
                .chain(doc.relations().iter().map(|r| r.id.clone()))
                .chain(doc.chains().iter().map(|c| c.id.clone()))
                .collect(),
            next: 0,
        };

        let mut entities: Vec<EntityMention> = existing.to_vec();
        for mut m in recognize_orgs(doc, &self.gazetteer) {
            let clash = existing
                .iter()
                .any(|e| (e.entity_type == EntityType::Company && e.span.overlaps(&m.span)) || e.span.crosses(&m.span));
            if !clash {
                m.id = ids.fresh("c");
                entities.push(m);
            }
        }

        let mut raw = Vec::new();
        for s in doc.sentences() {
            let tokens = doc.sentence_tokens(s);
            let candidates = chunk_sentence(tokens);
            let matches = match_sentence(tokens, s.tokens.start, &entities, &candidates, &self.patterns);
            raw.extend(expand_triggers(&matches));
        }
        let drafts = resolve_acronyms(dedup(raw.clone()), doc.chains(), &entities, doc);

        let mut relations: Vec<RelationMention> = doc.relations().to_vec();
        let mut kept = Vec::new();
        for d in drafts {
            if d.products.iter().any(|p| {
                entities.iter().any(|e| e.span.crosses(p) || (e.span == *p && e.entity_type == EntityType::Company))
            }) {
                continue;
            }
            let products = d.products.iter().map(|&p| product_id(&mut entities, &mut ids, doc, p)).collect();
            relations.push(RelationMention {
                id: ids.fresh("r"),
                company: d.company.clone(),
                products,
                trigger: d.trigger,
                provenance: Provenance::PreAnnotation,
                pattern_id: Some(d.pattern_id.clone()),
            });
            kept.push(d);
        }

        entities.sort_by_key(|a| (a.span.start, std::cmp::Reverse(a.span.end)));
        let document = doc.attach_annotations(entities, relations, doc.chains().to_vec())?;
        Ok(Preannotation { document, raw, relations: kept })
    }
}

fn product_id(entities: &mut Vec<EntityMention>, ids: &mut Ids, doc: &Document, span: Span) -> String {
    if let Some(m) = entities.iter().find(|m| m.entity_type == EntityType::Product && m.span == span) {
        return m.id.clone();
    }
    let id = ids.fresh("p");
    let kind = infer_kind(&doc.tokens()[span.indices()]);
    entities.push(EntityMention::new(id.clone(), EntityType::Product, span, kind, Provenance::PreAnnotation));
    id
}
