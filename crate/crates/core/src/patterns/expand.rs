use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::config::{Element, PatternConfig, Phrase};

/// One fully literal realization of a base pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfacePattern {
    pub id: String,
    pub base_id: String,
    pub elements: Vec<SurfaceElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceElement {
    Org,
    Products,
    Filler,
    Possessive,
    Literal(String),
    Trigger {
        phrase: Phrase,
        /// Every phrase of the originating trigger alternation. Used only to
        /// recognize coordinated triggers ("developer, manufacturer and
        /// vendor of") ahead of `phrase`.
        siblings: Arc<Vec<Phrase>>,
    },
}

impl fmt::Display for SurfaceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceElement::Org => f.write_str("<ORG>"),
            SurfaceElement::Products => f.write_str("<PRO>"),
            SurfaceElement::Filler => f.write_str("<NP>"),
            SurfaceElement::Possessive => f.write_str("<POSS>"),
            SurfaceElement::Literal(w) => f.write_str(w),
            SurfaceElement::Trigger { phrase, .. } => write!(f, "<TRIG:{}>", phrase.join(" ")),
        }
    }
}

impl fmt::Display for SurfacePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn expand_sequence(elements: &[Element]) -> Vec<Vec<SurfaceElement>> {
    let mut acc: Vec<Vec<SurfaceElement>> = vec![Vec::new()];
    for e in elements {
        let options = expand_element(e);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.extend(o.iter().cloned());
                    v
                })
            })
            .collect();
    }
    acc
}

fn expand_element(e: &Element) -> Vec<Vec<SurfaceElement>> {
    match e {
        Element::Org => vec![vec![SurfaceElement::Org]],
        Element::Products => vec![vec![SurfaceElement::Products]],
        Element::Filler => vec![vec![SurfaceElement::Filler]],
        Element::Possessive => vec![vec![SurfaceElement::Possessive]],
        Element::Literal(w) => vec![vec![SurfaceElement::Literal(w.clone())]],
        Element::Alternation(alts) => {
            alts.iter().map(|p| p.iter().map(|w| SurfaceElement::Literal(w.clone())).collect()).collect()
        }
        Element::Trigger(alts) => {
            let siblings = Arc::new(alts.clone());
            alts.iter()
                .map(|p| vec![SurfaceElement::Trigger { phrase: p.clone(), siblings: Arc::clone(&siblings) }])
                .collect()
        }
        Element::Optional(inner) => {
            let mut out = vec![Vec::new()];
            out.extend(expand_sequence(inner));
            out
        }
    }
}

/// Cartesian expansion of every base pattern. Output is in config order,
/// then lexicographic by rendered form; ids are `BASE.NNN`.
pub fn expand(config: &PatternConfig) -> Vec<SurfacePattern> {
    let mut out = Vec::new();
    for base in &config.patterns {
        let mut seen = BTreeSet::new();
        let mut variants: Vec<(String, Vec<SurfaceElement>)> = expand_sequence(&base.elements)
            .into_iter()
            .map(|els| {
                let rendered = els.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
                (rendered, els)
            })
            .filter(|(r, _)| seen.insert(r.clone()))
            .collect();
        variants.sort_by(|a, b| a.0.cmp(&b.0));
        for (n, (_, elements)) in variants.into_iter().enumerate() {
            out.push(SurfacePattern { id: format!("{}.{:03}", base.id, n + 1), base_id: base.id.clone(), elements });
        }
    }
    out
}
