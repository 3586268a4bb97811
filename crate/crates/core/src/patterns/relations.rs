//! Turning pattern matches into relation drafts.

use std::collections::HashSet;

use crate::model::{Document, EntityMention, EntityType, IdentityChain, MentionKind, Span};

use super::matcher::PatternMatch;

/// A relation before mention ids are assigned to its products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationDraft {
    pub company: String,
    pub company_span: Span,
    pub products: Vec<Span>,
    pub trigger: Option<Span>,
    pub pattern_id: String,
    pub surface_id: String,
}

impl RelationDraft {
    /// Identity used for deduplication.
    pub fn key(&self) -> (&str, &[Span], Option<Span>) {
        (&self.company, &self.products, self.trigger)
    }
}

/// One draft per trigger of every match, before deduplication.
pub fn expand_triggers(matches: &[PatternMatch]) -> Vec<RelationDraft> {
    let mut out = Vec::new();
    for m in matches {
        let triggers: Vec<Option<Span>> =
            if m.triggers.is_empty() { vec![None] } else { m.triggers.iter().copied().map(Some).collect() };
        for trigger in triggers {
            out.push(RelationDraft {
                company: m.company.clone(),
                company_span: m.company_span,
                products: m.products.clone(),
                trigger,
                pattern_id: m.pattern_id.clone(),
                surface_id: m.surface_id.clone(),
            });
        }
    }
    out
}

/// Keeps the first draft for each (company, products, trigger).
pub fn dedup(drafts: Vec<RelationDraft>) -> Vec<RelationDraft> {
    let mut seen = HashSet::new();
    drafts.into_iter().filter(|d| seen.insert((d.company.clone(), d.products.clone(), d.trigger))).collect()
}

/// Emits one relation per trigger span and removes exact duplicates.
pub fn fan_out_triggers(matches: &[PatternMatch]) -> Vec<RelationDraft> {
    dedup(expand_triggers(matches))
}

/// Re-points relations whose company is a chain target to the chain source,
/// when the source is a longer Company name in the same sentence.
///
/// `mentions` must contain every id referenced by `drafts` and `chains`.
pub fn resolve_acronyms(
    drafts: Vec<RelationDraft>,
    chains: &[IdentityChain],
    mentions: &[EntityMention],
    doc: &Document,
) -> Vec<RelationDraft> {
    if chains.is_empty() {
        return drafts;
    }
    let find = |id: &str| mentions.iter().find(|m| m.id == id);
    let resolved = drafts
        .into_iter()
        .map(|mut d| {
            let source = chains.iter().find(|c| c.targets.contains(&d.company)).and_then(|c| find(&c.source));
            if let Some(src) = source {
                let same_sentence = doc.sentence_of_span(src.span).is_some()
                    && doc.sentence_of_span(src.span) == doc.sentence_of_span(d.company_span);
                if src.entity_type == EntityType::Company
                    && src.kind == MentionKind::Name
                    && src.span.len() > d.company_span.len()
                    && same_sentence
                {
                    d.company = src.id.clone();
                    d.company_span = src.span;
                }
            }
            d
        })
        .collect();
    dedup(resolved)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pattern: &str, company: &str, products: &[(usize, usize)], triggers: &[(usize, usize)]) -> PatternMatch {
        PatternMatch {
            surface_id: format!("{pattern}.001"),
            pattern_id: pattern.into(),
            anchor: 0,
            company: company.into(),
            company_span: Span::new(0, 1),
            products: products.iter().map(|&(s, e)| Span::new(s, e)).collect(),
            triggers: triggers.iter().map(|&(s, e)| Span::new(s, e)).collect(),
        }
    }

    #[test]
    fn three_triggers_three_relations() {
        let out = fan_out_triggers(&[m("P", "c", &[(9, 10)], &[(3, 4), (5, 6), (7, 8)])]);
        assert_eq!(out.len(), 3);
        assert!(out.iter().all(|d| d.products == [Span::new(9, 10)]));
        let t: Vec<_> = out.iter().map(|d| d.trigger.unwrap().start).collect();
        assert_eq!(t, [3, 5, 7]);
    }

    #[test]
    fn single_trigger_unchanged() {
        let out = fan_out_triggers(&[m("P", "c", &[(2, 3)], &[(1, 2)])]);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].trigger, Some(Span::new(1, 2)));
    }

    #[test]
    fn identical_matches_collapse() {
        let a = m("P03", "c", &[(2, 3)], &[(1, 2)]);
        let b = m("P05", "c", &[(2, 3)], &[(1, 2)]);
        assert_eq!(expand_triggers(&[a.clone(), b.clone()]).len(), 2);
        let out = fan_out_triggers(&[a, b]);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].pattern_id, "P03");
    }
}
