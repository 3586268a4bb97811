//! Line-delimited JSON corpus files and column export.
//!
//! The first line is a header `{"schema_version":"1.0"}`; each following
//! line holds one document. Mention and trigger records repeat their surface
//! text, which is checked against the tokens on read.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{
    Corpus, Document, EntityMention, EntityType, IdentityChain, MentionKind, ModelError, Provenance, RelationMention,
    Span, Token, SCHEMA_VERSION,
};

#[derive(Debug, Error)]
pub enum CorpusIoError {
    #[error("unsupported schema version {found:?} (this build reads {SCHEMA_VERSION})")]
    SchemaVersionMismatch { found: String },
    #[error("line {line}: malformed record: {message}")]
    MalformedRecord { line: usize, message: String },
    #[error("line {line}: {detail}")]
    InvariantViolation { line: usize, detail: String },
    #[error("write failed: {0}")]
    SinkFailure(#[source] io::Error),
    #[error("read failed: {0}")]
    Io(#[from] io::Error),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    schema_version: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocRecord {
    doc_id: String,
    text: String,
    tokens: Vec<TokenRecord>,
    sentences: Vec<Span>,
    entities: Vec<EntityRecord>,
    relations: Vec<RelationRecord>,
    chains: Vec<ChainRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TokenRecord {
    text: String,
    pos: String,
    start: usize,
    end: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntityRecord {
    id: String,
    #[serde(rename = "type")]
    entity_type: EntityType,
    kind: MentionKind,
    start: usize,
    end: usize,
    provenance: Provenance,
    text: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriggerRecord {
    start: usize,
    end: usize,
    text: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationRecord {
    id: String,
    company: String,
    products: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    trigger: Option<TriggerRecord>,
    provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pattern_id: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainRecord {
    id: String,
    source: String,
    targets: Vec<String>,
}

fn to_record(doc: &Document) -> DocRecord {
    DocRecord {
        doc_id: doc.doc_id().to_string(),
        text: doc.text().to_string(),
        tokens: doc
            .tokens()
            .iter()
            .map(|t| TokenRecord { text: t.text.clone(), pos: t.pos.clone(), start: t.start, end: t.end })
            .collect(),
        sentences: doc.sentences().iter().map(|s| s.tokens).collect(),
        entities: doc
            .entities()
            .iter()
            .map(|m| EntityRecord {
                id: m.id.clone(),
                entity_type: m.entity_type,
                kind: m.kind,
                start: m.span.start,
                end: m.span.end,
                provenance: m.provenance,
                text: doc.surface(m.span).to_string(),
            })
            .collect(),
        relations: doc
            .relations()
            .iter()
            .map(|r| RelationRecord {
                id: r.id.clone(),
                company: r.company.clone(),
                products: r.products.clone(),
                trigger: r.trigger.map(|t| TriggerRecord {
                    start: t.start,
                    end: t.end,
                    text: doc.surface(t).to_string(),
                }),
                provenance: r.provenance,
                pattern_id: r.pattern_id.clone(),
            })
            .collect(),
        chains: doc
            .chains()
            .iter()
            .map(|c| ChainRecord { id: c.id.clone(), source: c.source.clone(), targets: c.targets.clone() })
            .collect(),
    }
}

/// Writes the header and one line per document.
pub fn write_corpus<W: Write>(corpus: &Corpus, mut sink: W) -> Result<(), CorpusIoError> {
    let header = Header { schema_version: corpus.schema_version().to_string() };
    let line = serde_json::to_string(&header).expect("header serializes");
    writeln!(sink, "{line}").map_err(CorpusIoError::SinkFailure)?;
    for doc in corpus.documents() {
        let line = serde_json::to_string(&to_record(doc)).expect("document serializes");
        writeln!(sink, "{line}").map_err(CorpusIoError::SinkFailure)?;
    }
    sink.flush().map_err(CorpusIoError::SinkFailure)
}

pub fn corpus_to_string(corpus: &Corpus) -> String {
    let mut buf = Vec::new();
    write_corpus(corpus, &mut buf).expect("writing to memory succeeds");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// How strictly annotation layers are re-checked on read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Checks {
    /// Every invariant.
    #[default]
    Full,
    /// Structural invariants only; guideline breaches are left for the
    /// validator.
    Structural,
}

fn check_version(found: &str) -> Result<(), CorpusIoError> {
    let major = |v: &str| v.split('.').next().and_then(|m| m.parse::<u64>().ok());
    match (major(found), major(SCHEMA_VERSION)) {
        (Some(a), Some(b)) if a == b => Ok(()),
        _ => Err(CorpusIoError::SchemaVersionMismatch { found: found.to_string() }),
    }
}

fn from_record(rec: DocRecord, line: usize, checks: Checks) -> Result<Document, CorpusIoError> {
    let invariant = |detail: String| CorpusIoError::InvariantViolation { line, detail };
    let model = |e: ModelError| CorpusIoError::InvariantViolation { line, detail: format!("{}: {e}", rec.doc_id) };
    let tokens = rec.tokens.into_iter().map(|t| Token::new(t.text, t.pos, t.start, t.end)).collect();
    let doc = Document::new(rec.doc_id.clone(), rec.text, tokens, rec.sentences).map_err(model)?;

    let mut entities = Vec::with_capacity(rec.entities.len());
    for e in rec.entities {
        let span = Span::new(e.start, e.end);
        if !span.is_empty() && span.end <= doc.tokens().len() && doc.surface(span) != e.text {
            return Err(invariant(format!(
                "{}: mention {} text {:?} does not match its tokens",
                rec.doc_id, e.id, e.text
            )));
        }
        entities.push(EntityMention::new(e.id, e.entity_type, span, e.kind, e.provenance));
    }
    let mut relations = Vec::with_capacity(rec.relations.len());
    for r in rec.relations {
        let trigger = match r.trigger {
            Some(t) => {
                let span = Span::new(t.start, t.end);
                if !span.is_empty() && span.end <= doc.tokens().len() && doc.surface(span) != t.text {
                    return Err(invariant(format!("{}: trigger of {} does not match its tokens", rec.doc_id, r.id)));
                }
                Some(span)
            }
            None => None,
        };
        relations.push(RelationMention {
            id: r.id,
            company: r.company,
            products: r.products,
            trigger,
            provenance: r.provenance,
            pattern_id: r.pattern_id,
        });
    }
    let chains =
        rec.chains.into_iter().map(|c| IdentityChain { id: c.id, source: c.source, targets: c.targets }).collect();
    match checks {
        Checks::Full => doc.attach_annotations(entities, relations, chains),
        Checks::Structural => doc.attach_annotations_for_review(entities, relations, chains),
    }
    .map_err(model)
}

/// Reads a corpus, re-validating every invariant.
pub fn read_corpus<R: BufRead>(source: R) -> Result<Corpus, CorpusIoError> {
    read_corpus_with(source, Checks::Full)
}

pub fn read_corpus_with<R: BufRead>(source: R, checks: Checks) -> Result<Corpus, CorpusIoError> {
    let mut version = None;
    let mut docs = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let malformed = |e: serde_json::Error| CorpusIoError::MalformedRecord { line: line_no, message: e.to_string() };
        if version.is_none() {
            let h: Header = serde_json::from_str(&line).map_err(malformed)?;
            check_version(&h.schema_version)?;
            version = Some(h.schema_version);
            continue;
        }
        let rec: DocRecord = serde_json::from_str(&line).map_err(malformed)?;
        docs.push((line_no, from_record(rec, line_no, checks)?));
    }
    let Some(version) = version else {
        return Err(CorpusIoError::MalformedRecord { line: 1, message: "missing header".into() });
    };
    let last_line = docs.last().map_or(1, |(l, _)| *l);
    Corpus::with_version(version, docs.into_iter().map(|(_, d)| d).collect())
        .map_err(|e| CorpusIoError::InvariantViolation { line: last_line, detail: e.to_string() })
}

pub fn corpus_from_str(text: &str) -> Result<Corpus, CorpusIoError> {
    read_corpus(text.as_bytes())
}

/// Column-format view of a document. Relations and chains are dropped;
/// where mentions nest, the outer one gets the BIO tags and the inner one is
/// listed in a comment.
pub fn export_column(doc: &Document) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# doc_id: {}", doc.doc_id());
    out.push_str("# relations and identity chains are not represented in this format\n");

    let mut ordered: Vec<&EntityMention> = doc.entities().iter().collect();
    ordered.sort_by_key(|m| (m.span.start, std::cmp::Reverse(m.span.end)));
    let mut outer: Vec<&EntityMention> = Vec::new();
    for m in ordered {
        if outer.iter().any(|o| o.span.contains(&m.span)) {
            let _ = writeln!(out, "# nested: {} {} {} {:?}", m.id, m.entity_type, m.span, doc.surface(m.span));
        } else {
            outer.push(m);
        }
    }

    let mut labels = vec![String::from("O"); doc.tokens().len()];
    for m in outer {
        for i in m.span.indices() {
            let prefix = if i == m.span.start { "B" } else { "I" };
            labels[i] = format!("{prefix}-{}", m.entity_type);
        }
    }
    for (n, s) in doc.sentences().iter().enumerate() {
        if n > 0 {
            out.push('\n');
        }
        for i in s.tokens.indices() {
            let t = &doc.tokens()[i];
            let _ = writeln!(out, "{}\t{}\t{}", t.text, t.pos, labels[i]);
        }
    }
    out
}
