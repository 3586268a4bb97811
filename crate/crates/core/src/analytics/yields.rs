use std::collections::HashSet;
use std::fmt::Write as _;

use crate::model::{Corpus, Span};
use crate::patterns::RelationDraft;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YieldRow {
    pub pattern_id: String,
    pub raw: u64,
    pub dedup: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternYield {
    pub rows: Vec<YieldRow>,
    pub total_raw: u64,
    pub total_dedup: u64,
}

impl PatternYield {
    pub fn render(&self) -> String {
        let mut out = format!("{:<10}{:>8}{:>8}\n", "pattern", "raw", "dedup");
        for r in &self.rows {
            let _ = writeln!(out, "{:<10}{:>8}{:>8}", r.pattern_id, r.raw, r.dedup);
        }
        let _ = writeln!(out, "{:<10}{:>8}{:>8}", "total", self.total_raw, self.total_dedup);
        out
    }
}

/// Raw and deduplicated relation counts per pattern.
///
/// `pattern_ids` fixes the row order and guarantees a row (possibly zero)
/// for each listed pattern; unknown ids are appended in first-seen order.
/// A deduplicated relation is credited to the first pattern that produced
/// it, so deduplicated counts sum to the number of distinct relations.
pub fn pattern_yield<'a, I>(pattern_ids: &[String], drafts: I) -> PatternYield
where
    I: IntoIterator<Item = (&'a str, &'a RelationDraft)>,
{
    let mut rows: Vec<YieldRow> =
        pattern_ids.iter().map(|id| YieldRow { pattern_id: id.clone(), raw: 0, dedup: 0 }).collect();
    let mut seen: HashSet<(&str, &str, &[Span], Option<Span>)> = HashSet::new();
    for (doc_id, d) in drafts {
        let i = match rows.iter().position(|r| r.pattern_id == d.pattern_id) {
            Some(i) => i,
            None => {
                rows.push(YieldRow { pattern_id: d.pattern_id.clone(), raw: 0, dedup: 0 });
                rows.len() - 1
            }
        };
        rows[i].raw += 1;
        if seen.insert((doc_id, &d.company, &d.products, d.trigger)) {
            rows[i].dedup += 1;
        }
    }
    let total_raw = rows.iter().map(|r| r.raw).sum();
    let total_dedup = rows.iter().map(|r| r.dedup).sum();
    PatternYield { rows, total_raw, total_dedup }
}

/// Yield recomputed from relations stored in a corpus. Relations without a
/// pattern id (human annotations) are ignored.
pub fn corpus_pattern_yield(pattern_ids: &[String], corpus: &Corpus) -> PatternYield {
    let mut drafts = Vec::new();
    for doc in corpus.documents() {
        let by_id = doc.mention_index();
        let span = |id: &str| by_id.get(id).map_or(Span::new(0, 0), |m| m.span);
        for r in doc.relations() {
            let Some(pid) = &r.pattern_id else { continue };
            drafts.push((
                doc.doc_id(),
                RelationDraft {
                    company: r.company.clone(),
                    company_span: span(&r.company),
                    products: r.products.iter().map(|p| span(p)).collect(),
                    trigger: r.trigger,
                    pattern_id: pid.clone(),
                    surface_id: String::new(),
                },
            ));
        }
    }
    pattern_yield(pattern_ids, drafts.iter().map(|(d, r)| (*d, r)))
}
