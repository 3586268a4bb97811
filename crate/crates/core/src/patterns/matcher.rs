//! Token-level matching of surface patterns against one sentence.

use crate::chunker::{matches_grammar, ChunkCandidate};
use crate::model::{EntityMention, EntityType, Span, Token};

use super::config::Phrase;
use super::expand::{SurfaceElement, SurfacePattern};

/// Pattern id recorded for relations found by the nested-company rule.
pub const NESTED_PATTERN_ID: &str = "NESTED";

/// Prepositions that a coordinated trigger list shares ("developer,
/// manufacturer and vendor of"); they are not part of any item's trigger.
const SHARED_PREPOSITIONS: &[&str] = &["of", "for", "to", "by", "from"];

/// A pattern hit before trigger fan-out. All spans are document token
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatch {
    pub surface_id: String,
    pub pattern_id: String,
    /// Token where the match starts.
    pub anchor: usize,
    pub company: String,
    pub company_span: Span,
    pub products: Vec<Span>,
    /// Zero (nested rule), one, or several coordinated trigger spans.
    pub triggers: Vec<Span>,
}

struct Sentence<'a> {
    tokens: &'a [Token],
    /// (local span, mention id)
    orgs: Vec<(Span, &'a str)>,
    /// Chunk candidates usable as arguments or fillers.
    eligible: Vec<Span>,
}

#[derive(Debug, Clone, Default)]
struct Bindings {
    company: Option<usize>,
    products: Vec<Span>,
    triggers: Vec<Span>,
}

fn eq_word(token: &Token, word: &str) -> bool {
    if matches!(word, "'s" | "’s" | "®" | "™") {
        token.text == word
    } else {
        token.text.to_lowercase() == word
    }
}

fn is_possessive(token: &Token) -> bool {
    token.pos == "POS" && matches!(token.text.as_str(), "'s" | "'" | "’s" | "’")
}

fn is_and_or(token: Option<&Token>) -> bool {
    token.is_some_and(|t| matches!(t.text.to_lowercase().as_str(), "and" | "or"))
}

fn is_comma(token: Option<&Token>) -> bool {
    token.is_some_and(|t| t.text == ",")
}

fn trigger_head(phrase: &Phrase) -> &[String] {
    match phrase.split_last() {
        Some((last, rest)) if !rest.is_empty() && SHARED_PREPOSITIONS.contains(&last.as_str()) => rest,
        _ => phrase,
    }
}

impl<'a> Sentence<'a> {
    fn new(tokens: &'a [Token], offset: usize, orgs: &'a [EntityMention], candidates: &[ChunkCandidate]) -> Self {
        let end = offset + tokens.len();
        let orgs: Vec<(Span, &str)> = orgs
            .iter()
            .filter(|m| m.entity_type == EntityType::Company && m.span.start >= offset && m.span.end <= end)
            .map(|m| (Span::new(m.span.start - offset, m.span.end - offset), m.id.as_str()))
            .collect();
        let mut s = Sentence { tokens, orgs, eligible: Vec::new() };
        s.eligible = candidates.iter().map(|c| c.span).filter(|sp| s.is_eligible(sp)).collect();
        s
    }

    /// Argument spans may contain a company but may not sit inside or cross one.
    fn is_eligible(&self, span: &Span) -> bool {
        self.orgs.iter().all(|(o, _)| !o.overlaps(span) || (span.contains(o) && span != o))
    }

    fn phrase_at(&self, pos: usize, words: &[String]) -> bool {
        pos + words.len() <= self.tokens.len() && words.iter().zip(&self.tokens[pos..]).all(|(w, t)| eq_word(t, w))
    }

    fn tok(&self, i: usize) -> Option<&Token> {
        self.tokens.get(i)
    }

    /// Eligible candidates plus the pieces left when the pattern's trigger
    /// phrase sits inside a candidate ("smartphone | providers").
    fn slot_spans(&self, pattern: &SurfacePattern) -> Vec<Span> {
        let mut spans = self.eligible.clone();
        for el in &pattern.elements {
            let SurfaceElement::Trigger { phrase, .. } = el else { continue };
            for c in &self.eligible {
                for a in c.start..c.end {
                    if a + phrase.len() > c.end || !self.phrase_at(a, phrase) {
                        continue;
                    }
                    for piece in [Span::new(c.start, a), Span::new(a + phrase.len(), c.end)] {
                        if !piece.is_empty()
                            && matches_grammar(&self.tokens[piece.indices()])
                            && self.is_eligible(&piece)
                        {
                            spans.push(piece);
                        }
                    }
                }
            }
        }
        spans.sort();
        spans.dedup();
        spans
    }

    /// Product lists `C (, C)* (,? (and|or) C)?` starting at `pos`, longest first.
    fn product_lists(&self, pos: usize, slots: &[Span]) -> Vec<(usize, Vec<Span>)> {
        let mut out = Vec::new();
        for c in starting_at(slots, pos) {
            self.extend_list(vec![c], slots, &mut out);
        }
        out.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.len().cmp(&a.1.len())));
        out
    }

    fn extend_list(&self, list: Vec<Span>, slots: &[Span], out: &mut Vec<(usize, Vec<Span>)>) {
        let end = list.last().unwrap().end;
        out.push((end, list.clone()));
        let mut finals = Vec::new();
        if is_comma(self.tok(end)) {
            if is_and_or(self.tok(end + 1)) {
                finals.push(end + 2);
            }
            for c in starting_at(slots, end + 1) {
                let mut l = list.clone();
                l.push(c);
                self.extend_list(l, slots, out);
            }
        } else if is_and_or(self.tok(end)) {
            finals.push(end + 1);
        }
        for f in finals {
            for c in starting_at(slots, f) {
                let mut l = list.clone();
                l.push(c);
                out.push((c.end, l));
            }
        }
    }

    fn filler_ends(&self, pos: usize, slots: &[Span]) -> Vec<usize> {
        let mut p = pos;
        while self.tok(p).is_some_and(|t| t.pos.starts_with("RB")) {
            p += 1;
        }
        let mut ends: Vec<usize> = starting_at(slots, p).map(|s| s.end).collect();
        ends.sort_unstable_by(|a, b| b.cmp(a));
        ends
    }

    /// Trigger readings at `pos`: a coordinated list ending in `phrase`
    /// first, then the plain phrase.
    fn trigger_options(&self, pos: usize, phrase: &Phrase, siblings: &[Phrase]) -> Vec<(usize, Vec<Span>)> {
        let mut out = Vec::new();
        if let Some(hit) = self.coordinated_trigger(pos, phrase, siblings) {
            out.push(hit);
        }
        if self.phrase_at(pos, phrase) {
            out.push((pos + phrase.len(), vec![Span::new(pos, pos + phrase.len())]));
        }
        out
    }

    fn coordinated_trigger(&self, pos: usize, phrase: &Phrase, siblings: &[Phrase]) -> Option<(usize, Vec<Span>)> {
        let mut items = Vec::new();
        let mut p = pos;
        loop {
            let len = siblings.iter().map(trigger_head).filter(|h| self.phrase_at(p, h)).map(<[String]>::len).max()?;
            items.push(Span::new(p, p + len));
            p += len;
            if is_comma(self.tok(p)) {
                if is_and_or(self.tok(p + 1)) {
                    p += 2;
                    break;
                }
                p += 1;
            } else if is_and_or(self.tok(p)) {
                p += 1;
                break;
            } else {
                return None;
            }
        }
        if !self.phrase_at(p, phrase) {
            return None;
        }
        items.push(Span::new(p, p + trigger_head(phrase).len()));
        Some((p + phrase.len(), items))
    }

    fn run(&self, els: &[SurfaceElement], pos: usize, slots: &[Span], b: &Bindings) -> Option<Bindings> {
        let Some((el, rest)) = els.split_first() else {
            return Some(b.clone());
        };
        match el {
            SurfaceElement::Org => {
                let (i, _) = self.orgs.iter().enumerate().find(|(_, (s, _))| s.start == pos)?;
                let mut nb = b.clone();
                nb.company = Some(i);
                self.run(rest, self.orgs[i].0.end, slots, &nb)
            }
            SurfaceElement::Products => self.product_lists(pos, slots).into_iter().find_map(|(end, list)| {
                let mut nb = b.clone();
                nb.products = list;
                self.run(rest, end, slots, &nb)
            }),
            SurfaceElement::Filler => {
                self.filler_ends(pos, slots).into_iter().find_map(|end| self.run(rest, end, slots, b))
            }
            SurfaceElement::Possessive => {
                if !self.tok(pos).is_some_and(is_possessive) {
                    return None;
                }
                let mut nb = b.clone();
                nb.triggers = vec![Span::new(pos, pos + 1)];
                self.run(rest, pos + 1, slots, &nb)
            }
            SurfaceElement::Literal(w) => {
                if !self.tok(pos).is_some_and(|t| eq_word(t, w)) {
                    return None;
                }
                self.run(rest, pos + 1, slots, b)
            }
            SurfaceElement::Trigger { phrase, siblings } => {
                self.trigger_options(pos, phrase, siblings).into_iter().find_map(|(end, triggers)| {
                    let mut nb = b.clone();
                    nb.triggers = triggers;
                    self.run(rest, end, slots, &nb)
                })
            }
        }
    }

    fn anchors(&self, pattern: &SurfacePattern, slots: &[Span]) -> Vec<usize> {
        let mut a: Vec<usize> = match pattern.elements.first() {
            Some(SurfaceElement::Org) => self.orgs.iter().map(|(s, _)| s.start).collect(),
            Some(SurfaceElement::Products) => slots.iter().map(|s| s.start).collect(),
            _ => (0..self.tokens.len()).collect(),
        };
        a.sort_unstable();
        a.dedup();
        a
    }

    /// Companies coordinated to the left of `org` ("Apple and Samsung are").
    fn coordinated_companies(&self, org: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut p = self.orgs[org].0.start;
        loop {
            let mut q = p;
            if q >= 1 && is_and_or(self.tok(q - 1)) {
                q -= 1;
                if q >= 1 && is_comma(self.tok(q - 1)) {
                    q -= 1;
                }
            } else if !out.is_empty() && q >= 1 && is_comma(self.tok(q - 1)) {
                q -= 1;
            } else {
                break;
            }
            match self.orgs.iter().position(|(s, _)| s.end == q) {
                Some(i) => {
                    out.push(i);
                    p = self.orgs[i].0.start;
                }
                None => break,
            }
        }
        out
    }
}

fn starting_at(slots: &[Span], pos: usize) -> impl Iterator<Item = Span> + '_ {
    let from = slots.partition_point(|s| s.start < pos);
    let to = slots.partition_point(|s| s.start <= pos);
    // longest first among spans that share a start
    slots[from..to].iter().rev().copied()
}

/// Matches every surface pattern against one sentence.
///
/// `tokens` is the sentence slice starting at document token `offset`;
/// `orgs` are document-level mentions (only Company mentions inside the
/// sentence are used); `candidates` are chunker output relative to the
/// sentence. Results are ordered by anchor, then pattern order.
pub fn match_sentence(
    tokens: &[Token],
    offset: usize,
    orgs: &[EntityMention],
    candidates: &[ChunkCandidate],
    patterns: &[SurfacePattern],
) -> Vec<PatternMatch> {
    let s = Sentence::new(tokens, offset, orgs, candidates);
    let shift = |sp: Span| Span::new(sp.start + offset, sp.end + offset);
    let mut hits: Vec<(usize, usize, PatternMatch)> = Vec::new();

    for (order, pattern) in patterns.iter().enumerate() {
        let slots = s.slot_spans(pattern);
        for anchor in s.anchors(pattern, &slots) {
            let Some(b) = s.run(&pattern.elements, anchor, &slots, &Bindings::default()) else {
                continue;
            };
            let Some(org) = b.company else { continue };
            let mut companies = vec![(anchor, org)];
            let subject_first = matches!(pattern.elements.first(), Some(SurfaceElement::Org))
                && !matches!(pattern.elements.get(1), Some(SurfaceElement::Possessive));
            if subject_first {
                companies.extend(s.coordinated_companies(org).into_iter().map(|i| (s.orgs[i].0.start, i)));
            }
            for (at, org) in companies {
                let (span, id) = s.orgs[org];
                hits.push((
                    at,
                    order,
                    PatternMatch {
                        surface_id: pattern.id.clone(),
                        pattern_id: pattern.base_id.clone(),
                        anchor: at + offset,
                        company: id.to_string(),
                        company_span: shift(span),
                        products: b.products.iter().copied().map(shift).collect(),
                        triggers: b.triggers.iter().copied().map(shift).collect(),
                    },
                ));
            }
        }
    }

    // a company name inside a product candidate, e.g. [[Apple] Watch Series 2]
    for c in &s.eligible {
        for (span, id) in &s.orgs {
            if c.contains(span) && c != span {
                hits.push((
                    c.start,
                    usize::MAX,
                    PatternMatch {
                        surface_id: NESTED_PATTERN_ID.to_string(),
                        pattern_id: NESTED_PATTERN_ID.to_string(),
                        anchor: c.start + offset,
                        company: id.to_string(),
                        company_span: shift(*span),
                        products: vec![shift(*c)],
                        triggers: Vec::new(),
                    },
                ));
            }
        }
    }

    hits.sort_by_key(|a| (a.0, a.1));
    hits.into_iter().map(|(_, _, m)| m).collect()
}
