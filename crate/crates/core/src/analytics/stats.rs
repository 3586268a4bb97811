use std::fmt;

use thiserror::Error;

use crate::model::{Corpus, Document, EntityType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("corpus has no documents")]
    EmptyCorpus,
}

/// Raw counts; additive under corpus concatenation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Totals {
    pub documents: u64,
    pub sentences: u64,
    pub words: u64,
    pub companies: u64,
    pub products: u64,
    pub relations: u64,
}

impl std::ops::Add for Totals {
    type Output = Totals;

    fn add(self, o: Totals) -> Totals {
        Totals {
            documents: self.documents + o.documents,
            sentences: self.sentences + o.sentences,
            words: self.words + o.words,
            companies: self.companies + o.companies,
            products: self.products + o.products,
            relations: self.relations + o.relations,
        }
    }
}

impl Totals {
    pub fn of_document(doc: &Document) -> Totals {
        let count = |ty| doc.entities().iter().filter(|m| m.entity_type == ty).count() as u64;
        Totals {
            documents: 1,
            sentences: doc.sentences().len() as u64,
            words: doc.tokens().iter().filter(|t| is_word(&t.text)).count() as u64,
            companies: count(EntityType::Company),
            products: count(EntityType::Product),
            relations: doc.relations().len() as u64,
        }
    }

    pub fn of_corpus(corpus: &Corpus) -> Totals {
        corpus.documents().iter().map(Totals::of_document).fold(Totals::default(), |a, b| a + b)
    }
}

/// A token counts as a word unless it is made only of punctuation.
pub fn is_word(token: &str) -> bool {
    token.chars().any(char::is_alphanumeric)
}

/// A per-document mean in tenths, rounded half up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mean {
    tenths: u64,
}

impl Mean {
    pub fn new(total: u64, documents: u64) -> Mean {
        Mean { tenths: (total * 20 + documents) / (2 * documents) }
    }

    pub fn as_f64(self) -> f64 {
        self.tenths as f64 / 10.0
    }
}

impl fmt::Display for Mean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.tenths / 10, self.tenths % 10)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusStats {
    pub totals: Totals,
    pub sentences: Mean,
    pub words: Mean,
    pub companies: Mean,
    pub products: Mean,
    pub relations: Mean,
}

impl CorpusStats {
    pub fn from_totals(totals: Totals) -> Result<CorpusStats, StatsError> {
        if totals.documents == 0 {
            return Err(StatsError::EmptyCorpus);
        }
        let m = |t| Mean::new(t, totals.documents);
        Ok(CorpusStats {
            totals,
            sentences: m(totals.sentences),
            words: m(totals.words),
            companies: m(totals.companies),
            products: m(totals.products),
            relations: m(totals.relations),
        })
    }

    /// (row name, total, mean) in table order.
    pub fn rows(&self) -> [(&'static str, u64, Option<Mean>); 6] {
        let t = &self.totals;
        [
            ("Documents", t.documents, None),
            ("Sentences", t.sentences, Some(self.sentences)),
            ("Words", t.words, Some(self.words)),
            ("Company mentions", t.companies, Some(self.companies)),
            ("Product mentions", t.products, Some(self.products)),
            ("CompanyProvidesProduct relations", t.relations, Some(self.relations)),
        ]
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("{:<34}{:>10}{:>12}\n", "", "Total", "Per doc");
        for (name, total, mean) in self.rows() {
            let mean = mean.map(|m| m.to_string()).unwrap_or_default();
            out.push_str(&format!("{name:<34}{total:>10}{mean:>12}\n"));
        }
        out
    }

    /// `key=value` lines.
    pub fn render_kv(&self) -> String {
        const KEYS: [&str; 6] = ["documents", "sentences", "words", "companies", "products", "relations"];
        let mut out = String::new();
        for (key, (_, total, mean)) in KEYS.iter().zip(self.rows()) {
            out.push_str(&format!("{key}.total={total}\n"));
            if let Some(m) = mean {
                out.push_str(&format!("{key}.mean={m}\n"));
            }
        }
        out
    }
}

pub fn stats(corpus: &Corpus) -> Result<CorpusStats, StatsError> {
    CorpusStats::from_totals(Totals::of_corpus(corpus))
}
