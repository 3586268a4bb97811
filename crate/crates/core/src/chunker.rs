//! Product-candidate chunking over POS tag sequences.
//!
//! The candidate grammar is `(VBG|N|JJ|CD)* N+ (N|JJ|CD)*` where `N` is any
//! of NN, NNS, NNP, NNPS. A run of admissible tags matches iff it contains a
//! noun and no VBG follows its last noun, which reduces matching to a
//! two-state automaton.

use crate::model::{is_noun_tag, Span, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChunkCandidate {
    pub span: Span,
    /// Index of the last noun token in `span`.
    pub head: usize,
    /// Set on every output of [`split_coordination`] that took part in a
    /// coordination.
    pub coordinated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TagClass {
    Noun,
    Modifier,
    Gerund,
    Other,
}

fn classify(tag: &str) -> TagClass {
    if is_noun_tag(tag) {
        TagClass::Noun
    } else {
        match tag {
            "JJ" | "CD" => TagClass::Modifier,
            "VBG" => TagClass::Gerund,
            _ => TagClass::Other,
        }
    }
}

fn is_trademark(token: &Token) -> bool {
    token.text == "®" || token.text == "™"
}

/// End of the longest grammar match starting at `start`, if any.
fn longest_match(tags: &[TagClass], start: usize) -> Option<usize> {
    let mut have_noun = false;
    let mut best = None;
    for (i, class) in tags.iter().enumerate().skip(start) {
        match class {
            TagClass::Noun => have_noun = true,
            TagClass::Modifier => {}
            TagClass::Gerund => have_noun = false,
            TagClass::Other => break,
        }
        if have_noun {
            best = Some(i + 1);
        }
    }
    best
}

/// True when the whole tag slice matches the grammar.
pub fn matches_grammar(tokens: &[Token]) -> bool {
    let tags: Vec<_> = tokens.iter().map(|t| classify(&t.pos)).collect();
    !tags.is_empty() && longest_match(&tags, 0) == Some(tags.len())
}

fn head_of(tokens: &[Token], span: Span) -> usize {
    span.indices().rev().find(|&i| tokens[i].is_noun()).unwrap_or(span.end - 1)
}

/// Leftmost-longest maximal candidates over one sentence's tokens. Indices
/// are relative to `tokens`. Trademark symbols directly after a candidate
/// are absorbed into it.
pub fn chunk(tokens: &[Token]) -> Vec<ChunkCandidate> {
    let tags: Vec<_> = tokens.iter().map(|t| classify(&t.pos)).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        match longest_match(&tags, i) {
            Some(mut end) => {
                let head = head_of(tokens, Span::new(i, end));
                while end < tokens.len() && is_trademark(&tokens[end]) {
                    end += 1;
                }
                out.push(ChunkCandidate { span: Span::new(i, end), head, coordinated: false });
                i = end;
            }
            None => i += 1,
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Unit {
    Candidate(usize),
    /// Noun-free run of admissible tags.
    Premodifier(Span),
    Comma,
    Conjunction,
    Other,
}

fn units(candidates: &[ChunkCandidate], tokens: &[Token]) -> Vec<(Unit, Span)> {
    let mut out = Vec::new();
    let mut i = 0;
    let mut next_cand = 0;
    while i < tokens.len() {
        if let Some(c) = candidates.get(next_cand).filter(|c| c.span.start == i) {
            out.push((Unit::Candidate(next_cand), c.span));
            i = c.span.end;
            next_cand += 1;
            continue;
        }
        let limit = candidates.get(next_cand).map_or(tokens.len(), |c| c.span.start);
        let t = &tokens[i];
        if classify(&t.pos) != TagClass::Other && classify(&t.pos) != TagClass::Noun {
            let start = i;
            while i < limit && matches!(classify(&tokens[i].pos), TagClass::Modifier | TagClass::Gerund) {
                i += 1;
            }
            out.push((Unit::Premodifier(Span::new(start, i)), Span::new(start, i)));
            continue;
        }
        let unit = if t.text == "," {
            Unit::Comma
        } else if t.pos == "CC" && matches!(t.text.to_lowercase().as_str(), "and" | "or") {
            Unit::Conjunction
        } else {
            Unit::Other
        };
        out.push((unit, Span::new(i, i + 1)));
        i += 1;
    }
    out
}

fn is_conjunct(u: Unit) -> bool {
    matches!(u, Unit::Candidate(_) | Unit::Premodifier(_))
}

/// Parses `X (, X)* ,? (and|or) X` starting at unit `at`. Returns the unit
/// indices of the conjuncts.
fn coordination_at(units: &[(Unit, Span)], at: usize) -> Option<Vec<usize>> {
    if !is_conjunct(units[at].0) {
        return None;
    }
    let unit = |i: usize| units.get(i).map(|u| u.0);
    let mut conjuncts = vec![at];
    let mut i = at + 1;
    loop {
        match (unit(i), unit(i + 1), unit(i + 2)) {
            (Some(Unit::Comma), Some(Unit::Conjunction), Some(x)) if is_conjunct(x) => {
                conjuncts.push(i + 2);
                break;
            }
            (Some(Unit::Conjunction), Some(x), _) if is_conjunct(x) => {
                conjuncts.push(i + 1);
                break;
            }
            (Some(Unit::Comma), Some(x), _) if is_conjunct(x) => {
                conjuncts.push(i + 1);
                i += 2;
            }
            _ => return None,
        }
    }
    matches!(units[*conjuncts.last()?].0, Unit::Candidate(_)).then_some(conjuncts)
}

fn all_adjectives(tokens: &[Token], span: Span) -> bool {
    tokens[span.indices()].iter().all(|t| t.pos == "JJ")
}

/// Applies the coordination rule to chunk output.
///
/// For `X (, X)* (and|or) X` whose last conjunct is a candidate: when every
/// earlier conjunct is an adjective-only premodifier run, the whole
/// coordination becomes one candidate; otherwise each noun-bearing conjunct
/// stands alone. All candidates touched by a coordination are flagged.
pub fn split_coordination(candidates: &[ChunkCandidate], tokens: &[Token]) -> Vec<ChunkCandidate> {
    let units = units(candidates, tokens);
    let mut out = Vec::with_capacity(candidates.len());
    let mut i = 0;
    while i < units.len() {
        let Some(conjuncts) = coordination_at(&units, i) else {
            if let Unit::Candidate(c) = units[i].0 {
                out.push(candidates[c]);
            }
            i += 1;
            continue;
        };
        let last = *conjuncts.last().unwrap();
        let (head_units, _) = conjuncts.split_at(conjuncts.len() - 1);
        let merge = head_units.iter().all(|&u| matches!(units[u].0, Unit::Premodifier(s) if all_adjectives(tokens, s)));
        if merge {
            let Unit::Candidate(c) = units[last].0 else { unreachable!() };
            let span = Span::new(units[conjuncts[0]].1.start, candidates[c].span.end);
            out.push(ChunkCandidate { span, head: candidates[c].head, coordinated: true });
        } else {
            for &u in &conjuncts {
                if let Unit::Candidate(c) = units[u].0 {
                    out.push(ChunkCandidate { coordinated: true, ..candidates[c] });
                }
            }
        }
        i = last + 1;
    }
    out
}

/// Chunking followed by coordination splitting.
pub fn chunk_sentence(tokens: &[Token]) -> Vec<ChunkCandidate> {
    split_coordination(&chunk(tokens), tokens)
}
