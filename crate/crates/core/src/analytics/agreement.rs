use std::collections::BTreeSet;

use thiserror::Error;

use crate::model::{Corpus, Document, EntityType, Span};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AgreementError {
    #[error("layers disagree on tokenization of {doc_id}")]
    TokenizationMismatch { doc_id: String },
    #[error("document {doc_id} is missing from one layer")]
    MissingDocument { doc_id: String },
}

/// Token-level 2x2 confusion for one entity type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Confusion {
    pub both: u64,
    pub a_only: u64,
    pub b_only: u64,
    pub neither: u64,
}

impl Confusion {
    pub fn total(&self) -> u64 {
        self.both + self.a_only + self.b_only + self.neither
    }

    /// Cohen's kappa. When chance agreement is 1 the value is 1.0 for
    /// perfect observed agreement and 0.0 otherwise.
    pub fn kappa(&self) -> f64 {
        let n = self.total() as f64;
        if n == 0.0 {
            return 1.0;
        }
        let po = (self.both + self.neither) as f64 / n;
        let a1 = (self.both + self.a_only) as f64 / n;
        let b1 = (self.both + self.b_only) as f64 / n;
        let pe = a1 * b1 + (1.0 - a1) * (1.0 - b1);
        if (1.0 - pe).abs() < f64::EPSILON {
            return if po == 1.0 { 1.0 } else { 0.0 };
        }
        (po - pe) / (1.0 - pe)
    }

    fn add(&mut self, o: Confusion) {
        self.both += o.both;
        self.a_only += o.a_only;
        self.b_only += o.b_only;
        self.neither += o.neither;
    }
}

/// Matched items against the sizes of both layers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MatchCounts {
    pub matched: u64,
    pub a: u64,
    pub b: u64,
}

impl MatchCounts {
    /// Both layers empty counts as perfect agreement.
    pub fn f1(&self) -> f64 {
        if self.a + self.b == 0 {
            1.0
        } else {
            2.0 * self.matched as f64 / (self.a + self.b) as f64
        }
    }

    /// Precision of layer b against layer a.
    pub fn precision(&self) -> f64 {
        if self.b == 0 {
            1.0
        } else {
            self.matched as f64 / self.b as f64
        }
    }

    pub fn recall(&self) -> f64 {
        if self.a == 0 {
            1.0
        } else {
            self.matched as f64 / self.a as f64
        }
    }

    fn add(&mut self, o: MatchCounts) {
        self.matched += o.matched;
        self.a += o.a;
        self.b += o.b;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AgreementScores {
    pub company_tokens: Confusion,
    pub product_tokens: Confusion,
    pub company_mentions: MatchCounts,
    pub product_mentions: MatchCounts,
    pub relations: MatchCounts,
}

impl AgreementScores {
    pub fn kappa(&self, ty: EntityType) -> f64 {
        match ty {
            EntityType::Company => self.company_tokens.kappa(),
            EntityType::Product => self.product_tokens.kappa(),
        }
    }

    pub fn mention_f1(&self, ty: EntityType) -> f64 {
        match ty {
            EntityType::Company => self.company_mentions.f1(),
            EntityType::Product => self.product_mentions.f1(),
        }
    }

    pub fn relation_f1(&self) -> f64 {
        self.relations.f1()
    }

    fn add(&mut self, o: &AgreementScores) {
        self.company_tokens.add(o.company_tokens);
        self.product_tokens.add(o.product_tokens);
        self.company_mentions.add(o.company_mentions);
        self.product_mentions.add(o.product_mentions);
        self.relations.add(o.relations);
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("{:<10}{:>10}{:>12}\n", "", "Kappa", "Mention F1");
        for ty in EntityType::ALL {
            out.push_str(&format!("{:<10}{:>10.3}{:>12.3}\n", ty.as_str(), self.kappa(ty), self.mention_f1(ty)));
        }
        out.push_str(&format!("{:<10}{:>10}{:>12.3}\n", "Relation", "-", self.relation_f1()));
        out
    }

    pub fn render_kv(&self) -> String {
        let mut out = String::new();
        for ty in EntityType::ALL {
            let key = ty.as_str().to_lowercase();
            out.push_str(&format!("{key}.kappa={:.4}\n{key}.f1={:.4}\n", self.kappa(ty), self.mention_f1(ty)));
        }
        out.push_str(&format!("relation.f1={:.4}\n", self.relation_f1()));
        out
    }
}

fn token_labels(doc: &Document, ty: EntityType) -> Vec<bool> {
    let mut labels = vec![false; doc.tokens().len()];
    for m in doc.entities().iter().filter(|m| m.entity_type == ty) {
        for i in m.span.indices() {
            labels[i] = true;
        }
    }
    labels
}

fn confusion(a: &Document, b: &Document, ty: EntityType) -> Confusion {
    let mut c = Confusion::default();
    for (x, y) in token_labels(a, ty).into_iter().zip(token_labels(b, ty)) {
        match (x, y) {
            (true, true) => c.both += 1,
            (true, false) => c.a_only += 1,
            (false, true) => c.b_only += 1,
            (false, false) => c.neither += 1,
        }
    }
    c
}

fn mention_counts(a: &Document, b: &Document, ty: EntityType) -> MatchCounts {
    let spans = |d: &Document| -> BTreeSet<Span> {
        d.entities().iter().filter(|m| m.entity_type == ty).map(|m| m.span).collect()
    };
    let (sa, sb) = (spans(a), spans(b));
    MatchCounts { matched: sa.intersection(&sb).count() as u64, a: sa.len() as u64, b: sb.len() as u64 }
}

type RelationKey = (Span, Vec<Span>, Option<Span>);

fn relation_keys(d: &Document) -> Vec<RelationKey> {
    let by_id = d.mention_index();
    let span = |id: &str| by_id.get(id).map(|m| m.span).unwrap_or(Span::new(0, 0));
    d.relations()
        .iter()
        .map(|r| {
            let mut products: Vec<Span> = r.products.iter().map(|p| span(p)).collect();
            products.sort();
            products.dedup();
            (span(&r.company), products, r.trigger)
        })
        .collect()
}

fn relations_agree(x: &RelationKey, y: &RelationKey) -> bool {
    x.0 == y.0
        && x.1 == y.1
        && match (x.2, y.2) {
            (Some(s), Some(t)) => s == t,
            _ => true,
        }
}

/// Maximum bipartite matching size (Kuhn's augmenting paths).
fn max_matching(adj: &[Vec<usize>], right: usize) -> usize {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; right];
    (0..adj.len()).filter(|&u| augment(u, adj, &mut vec![false; right], &mut owner)).count()
}

fn relation_counts(a: &Document, b: &Document) -> MatchCounts {
    let (ka, kb) = (relation_keys(a), relation_keys(b));
    let adj: Vec<Vec<usize>> = ka
        .iter()
        .map(|x| kb.iter().enumerate().filter(|(_, y)| relations_agree(x, y)).map(|(j, _)| j).collect())
        .collect();
    MatchCounts { matched: max_matching(&adj, kb.len()) as u64, a: ka.len() as u64, b: kb.len() as u64 }
}

/// Compares two annotation layers over the same tokens.
pub fn agreement(a: &Document, b: &Document) -> Result<AgreementScores, AgreementError> {
    let same_tokens =
        a.tokens().len() == b.tokens().len() && a.tokens().iter().zip(b.tokens()).all(|(x, y)| x.text == y.text);
    if !same_tokens {
        return Err(AgreementError::TokenizationMismatch { doc_id: a.doc_id().to_string() });
    }
    Ok(AgreementScores {
        company_tokens: confusion(a, b, EntityType::Company),
        product_tokens: confusion(a, b, EntityType::Product),
        company_mentions: mention_counts(a, b, EntityType::Company),
        product_mentions: mention_counts(a, b, EntityType::Product),
        relations: relation_counts(a, b),
    })
}

/// Pools counts over documents paired by doc_id.
pub fn corpus_agreement(a: &Corpus, b: &Corpus) -> Result<AgreementScores, AgreementError> {
    let mut total = AgreementScores::default();
    for da in a.documents() {
        let db = b
            .documents()
            .iter()
            .find(|d| d.doc_id() == da.doc_id())
            .ok_or_else(|| AgreementError::MissingDocument { doc_id: da.doc_id().to_string() })?;
        total.add(&agreement(da, db)?);
    }
    if let Some(d) = b.documents().iter().find(|d| !a.documents().iter().any(|x| x.doc_id() == d.doc_id())) {
        return Err(AgreementError::MissingDocument { doc_id: d.doc_id().to_string() });
    }
    Ok(total)
}
