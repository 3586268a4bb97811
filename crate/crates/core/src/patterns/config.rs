//! Base-pattern declaration language.
//!
//! ```text
//! # comment
//! set verbs = ~produce|~develop|make
//! P1: <ORG> <POSS> <PRO>
//! P3: <ORG> <TRIG:@verbs> <PRO>
//! P5: <ORG> [@be] {a|the|an} <PRO> <TRIG:producer|provider>
//! ```
//!
//! Elements: `<ORG>`, `<PRO>`, `<NP>` (unlabelled chunk filler), `<POSS>`,
//! `<TRIG:alt|…>`, `{alt|…}`, `[ ELEMENT+ ]`, `@set` and bare literals.
//! Inside alternations `~word` expands to the word's four verb forms and
//! `@set` splices in a declared set.

use std::collections::BTreeMap;

use thiserror::Error;

use super::inflect::inflections;

/// One alternative: a fixed word sequence.
pub type Phrase = Vec<String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Org,
    Products,
    /// A chunk candidate that fills a position without becoming an argument.
    Filler,
    Possessive,
    Trigger(Vec<Phrase>),
    Alternation(Vec<Phrase>),
    Optional(Vec<Element>),
    Literal(String),
}

impl Element {
    /// Number of distinct literal realizations.
    pub fn variant_count(&self) -> u64 {
        match self {
            Element::Trigger(a) | Element::Alternation(a) => a.len() as u64,
            Element::Optional(inner) => 1 + sequence_count(inner),
            _ => 1,
        }
    }
}

pub(crate) fn sequence_count(elements: &[Element]) -> u64 {
    elements.iter().map(Element::variant_count).product()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePattern {
    pub id: String,
    pub elements: Vec<Element>,
    pub line: usize,
}

impl BasePattern {
    pub fn surface_count(&self) -> u64 {
        sequence_count(&self.elements)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PatternConfig {
    pub sets: BTreeMap<String, Vec<Phrase>>,
    pub patterns: Vec<BasePattern>,
}

impl PatternConfig {
    /// Closed-form expansion size, computed without expanding.
    pub fn surface_count(&self) -> u64 {
        self.patterns.iter().map(BasePattern::surface_count).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("unknown set reference @{0}")]
    UnknownSetReference(String),
    #[error("duplicate pattern id {0}")]
    DuplicatePatternId(String),
    #[error("pattern {0} declares more than one trigger")]
    MultipleTriggers(String),
    #[error("pattern {0} declares no trigger")]
    MissingTrigger(String),
    #[error("pattern {id} must contain exactly one {slot} slot")]
    SlotCount { id: String, slot: &'static str },
}

fn syntax(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::SyntaxError { line, message: message.into() }
}

pub fn parse_config(text: &str) -> Result<PatternConfig, ConfigError> {
    let mut config = PatternConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        if let Some(decl) = body.strip_prefix("set ") {
            let (name, alts) = decl.split_once('=').ok_or_else(|| syntax(line, "expected `set NAME = alt|…`"))?;
            let name = name.trim();
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(syntax(line, format!("invalid set name {name:?}")));
            }
            if config.sets.contains_key(name) {
                return Err(syntax(line, format!("set {name} declared twice")));
            }
            let phrases = parse_alternatives(alts, line, &config.sets)?;
            config.sets.insert(name.to_string(), phrases);
            continue;
        }
        let (id, rest) = body.split_once(':').ok_or_else(|| syntax(line, "expected `ID: ELEMENT+`"))?;
        let id = id.trim();
        if id.is_empty() || id.contains(char::is_whitespace) {
            return Err(syntax(line, format!("invalid pattern id {id:?}")));
        }
        if config.patterns.iter().any(|p| p.id == id) {
            return Err(ConfigError::DuplicatePatternId(id.to_string()));
        }
        let lexemes = lex(rest, line)?;
        let mut pos = 0;
        let elements = parse_sequence(&lexemes, &mut pos, line, &config.sets)?;
        if pos != lexemes.len() {
            return Err(syntax(line, "unbalanced `]`"));
        }
        if elements.is_empty() {
            return Err(syntax(line, "pattern has no elements"));
        }
        check_pattern(id, &elements, line)?;
        config.patterns.push(BasePattern { id: id.to_string(), elements, line });
    }
    Ok(config)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Lexeme {
    Angle(String),
    Brace(String),
    Open,
    Close,
    Word(String),
}

fn lex(s: &str, line: usize) -> Result<Vec<Lexeme>, ConfigError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '<' | '{' => {
                let close = if c == '<' { '>' } else { '}' };
                let end = s[i + 1..].find(close).ok_or_else(|| syntax(line, format!("missing `{close}`")))?;
                let inner = s[i + 1..i + 1 + end].to_string();
                out.push(if c == '<' { Lexeme::Angle(inner) } else { Lexeme::Brace(inner) });
                while chars.peek().is_some_and(|&(j, _)| j <= i + 1 + end) {
                    chars.next();
                }
            }
            '[' => {
                out.push(Lexeme::Open);
                chars.next();
            }
            ']' => {
                out.push(Lexeme::Close);
                chars.next();
            }
            '>' | '}' => return Err(syntax(line, format!("unexpected `{c}`"))),
            _ => {
                let mut end = s.len();
                for (j, d) in s[i..].char_indices() {
                    if d.is_whitespace() || "<>{}[]".contains(d) {
                        end = i + j;
                        break;
                    }
                }
                out.push(Lexeme::Word(s[i..end].to_string()));
                while chars.peek().is_some_and(|&(j, _)| j < end) {
                    chars.next();
                }
            }
        }
    }
    Ok(out)
}

fn parse_sequence(
    lexemes: &[Lexeme],
    pos: &mut usize,
    line: usize,
    sets: &BTreeMap<String, Vec<Phrase>>,
) -> Result<Vec<Element>, ConfigError> {
    let mut out = Vec::new();
    while let Some(lx) = lexemes.get(*pos) {
        *pos += 1;
        let el = match lx {
            Lexeme::Close => {
                *pos -= 1;
                break;
            }
            Lexeme::Open => {
                let inner = parse_sequence(lexemes, pos, line, sets)?;
                if lexemes.get(*pos) != Some(&Lexeme::Close) {
                    return Err(syntax(line, "missing `]`"));
                }
                *pos += 1;
                if inner.is_empty() {
                    return Err(syntax(line, "empty optional group"));
                }
                Element::Optional(inner)
            }
            Lexeme::Angle(inner) => match inner.trim() {
                "ORG" => Element::Org,
                "PRO" => Element::Products,
                "NP" => Element::Filler,
                "POSS" => Element::Possessive,
                other => match other.strip_prefix("TRIG:") {
                    Some(alts) => Element::Trigger(parse_alternatives(alts, line, sets)?),
                    None => return Err(syntax(line, format!("unknown slot <{other}>"))),
                },
            },
            Lexeme::Brace(inner) => Element::Alternation(parse_alternatives(inner, line, sets)?),
            Lexeme::Word(w) if w.starts_with('@') || w.starts_with('~') => {
                Element::Alternation(parse_alternatives(w, line, sets)?)
            }
            Lexeme::Word(w) => Element::Literal(w.to_lowercase()),
        };
        out.push(el);
    }
    Ok(out)
}

fn parse_alternatives(s: &str, line: usize, sets: &BTreeMap<String, Vec<Phrase>>) -> Result<Vec<Phrase>, ConfigError> {
    let mut out: Vec<Phrase> = Vec::new();
    let push = |p: Phrase, out: &mut Vec<Phrase>| {
        if !out.contains(&p) {
            out.push(p);
        }
    };
    for alt in s.split('|') {
        let words: Vec<&str> = alt.split_whitespace().collect();
        if words.is_empty() {
            return Err(syntax(line, "empty alternative"));
        }
        if let [single] = words.as_slice() {
            if let Some(name) = single.strip_prefix('@') {
                let set = sets.get(name).ok_or_else(|| ConfigError::UnknownSetReference(name.to_string()))?;
                for p in set {
                    push(p.clone(), &mut out);
                }
                continue;
            }
        }
        // each `~word` multiplies the alternative by its verb forms
        let mut variants: Vec<Phrase> = vec![Vec::new()];
        for w in words {
            if w.starts_with('@') {
                return Err(syntax(line, "set references must stand alone in an alternative"));
            }
            let forms: Vec<String> = match w.strip_prefix('~') {
                Some("") => return Err(syntax(line, "`~` without a verb")),
                Some(verb) => inflections(verb).to_vec(),
                None => vec![w.to_lowercase()],
            };
            variants = variants
                .into_iter()
                .flat_map(|v| {
                    forms.iter().map(move |f| {
                        let mut v = v.clone();
                        v.push(f.clone());
                        v
                    })
                })
                .collect();
        }
        for v in variants {
            push(v, &mut out);
        }
    }
    Ok(out)
}

fn check_pattern(id: &str, elements: &[Element], line: usize) -> Result<(), ConfigError> {
    let (mut orgs, mut pros, mut triggers) = (0, 0, 0);
    for e in elements {
        match e {
            Element::Org => orgs += 1,
            Element::Products => pros += 1,
            Element::Possessive | Element::Trigger(_) => triggers += 1,
            Element::Optional(inner) if contains_role(inner) => {
                return Err(syntax(line, "slots and triggers cannot be optional"));
            }
            _ => {}
        }
    }
    if orgs != 1 {
        return Err(ConfigError::SlotCount { id: id.to_string(), slot: "<ORG>" });
    }
    if pros != 1 {
        return Err(ConfigError::SlotCount { id: id.to_string(), slot: "<PRO>" });
    }
    match triggers {
        0 => Err(ConfigError::MissingTrigger(id.to_string())),
        1 => Ok(()),
        _ => Err(ConfigError::MultipleTriggers(id.to_string())),
    }
}

fn contains_role(elements: &[Element]) -> bool {
    elements.iter().any(|e| match e {
        Element::Org | Element::Products | Element::Possessive | Element::Trigger(_) => true,
        Element::Optional(inner) => contains_role(inner),
        _ => false,
    })
}
