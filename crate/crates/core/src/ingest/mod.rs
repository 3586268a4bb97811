//! Turning raw or pre-tagged text into [`Document`]s.

mod orgs;
mod tagger;
mod tokenize;

pub use orgs::{recognize_in_sentence, recognize_orgs, OrgGazetteer};
pub use tagger::{tag, LexiconError, TaggerLexicon};
pub use tokenize::{split_sentences, tokenize, RawToken};

use thiserror::Error;

use crate::model::{
    Document, EntityMention, EntityType, IdentityChain, MentionKind, ModelError, Provenance, Span, Token,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IngestError {
    #[error("line {0}: malformed column line")]
    MalformedLine(usize),
    #[error("line {0}: illegal BIO transition")]
    IllegalBioTransition(usize),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Tokenizes, sentence-splits and tags raw text.
pub fn ingest_text(doc_id: &str, text: &str, lexicon: &TaggerLexicon) -> Result<Document, ModelError> {
    let raw = tokenize(text);
    let sentences = split_sentences(&raw);
    let mut tokens = Vec::with_capacity(raw.len());
    for s in &sentences {
        let slice = &raw[s.indices()];
        let tags = tag(&slice.iter().map(|t| t.text.as_str()).collect::<Vec<_>>(), lexicon);
        for (t, pos) in slice.iter().zip(tags) {
            tokens.push(Token::new(t.text.clone(), pos, t.start, t.end));
        }
    }
    Document::new(doc_id, text, tokens, sentences)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bio {
    Begin(EntityType),
    Inside(EntityType),
    Outside,
}

fn parse_bio(field: &str) -> Option<Bio> {
    let ty = |s: &str| match s {
        "Company" => Some(EntityType::Company),
        "Product" => Some(EntityType::Product),
        _ => None,
    };
    match field {
        "O" => Some(Bio::Outside),
        _ => match field.split_once('-')? {
            ("B", t) => ty(t).map(Bio::Begin),
            ("I", t) => ty(t).map(Bio::Inside),
            _ => None,
        },
    }
}

/// Mention kind guessed from tags: pronouns, then proper nouns, else nominal.
pub fn infer_kind(tokens: &[Token]) -> MentionKind {
    if tokens.iter().all(|t| matches!(t.pos.as_str(), "PRP" | "PRP$")) {
        MentionKind::Pronominal
    } else if tokens.iter().any(|t| matches!(t.pos.as_str(), "NNP" | "NNPS")) {
        MentionKind::Name
    } else {
        MentionKind::Nominal
    }
}

/// Reads the column format: `TOKEN<TAB>POS[<TAB>BIO]` per line, blank line
/// between sentences, `#` comment lines. The document text is rebuilt with
/// single spaces between tokens and a newline between sentences.
///
/// BIO mentions get ids `e0`, `e1`, ... in order. A comment line
/// `# identity: SOURCE TARGET...` declares an identity chain over those ids.
pub fn read_tagged(doc_id: &str, column_text: &str) -> Result<Document, IngestError> {
    let mut text = String::new();
    let mut tokens: Vec<Token> = Vec::new();
    let mut sentences = Vec::new();
    let mut sentence_start = 0;
    let mut mentions: Vec<(EntityType, Span)> = Vec::new();
    let mut open: Option<(EntityType, usize)> = None;
    let mut chains = Vec::new();

    fn close(open: &mut Option<(EntityType, usize)>, end: usize, mentions: &mut Vec<(EntityType, Span)>) {
        if let Some((ty, start)) = open.take() {
            mentions.push((ty, Span::new(start, end)));
        }
    }

    for (i, line) in column_text.lines().enumerate() {
        let line_no = i + 1;
        if let Some(rest) = line.strip_prefix("# identity:") {
            let mut ids = rest.split_whitespace().map(str::to_string);
            let source = ids.next().ok_or(IngestError::MalformedLine(line_no))?;
            chains.push(IdentityChain { id: format!("i{}", chains.len()), source, targets: ids.collect() });
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        if line.trim().is_empty() {
            close(&mut open, tokens.len(), &mut mentions);
            if tokens.len() > sentence_start {
                sentences.push(Span::new(sentence_start, tokens.len()));
                sentence_start = tokens.len();
            }
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if !(2..=3).contains(&fields.len()) || fields[0].is_empty() || fields[0].contains(char::is_whitespace) {
            return Err(IngestError::MalformedLine(line_no));
        }
        let pos = fields[1].trim();
        if !crate::model::is_valid_pos(pos) {
            return Err(IngestError::MalformedLine(line_no));
        }
        let bio = match fields.get(2).map(|f| f.trim()) {
            None | Some("") => Bio::Outside,
            Some(f) => parse_bio(f).ok_or(IngestError::MalformedLine(line_no))?,
        };

        let index = tokens.len();
        match bio {
            Bio::Outside => close(&mut open, index, &mut mentions),
            Bio::Begin(ty) => {
                close(&mut open, index, &mut mentions);
                open = Some((ty, index));
            }
            Bio::Inside(ty) => match open {
                Some((open_ty, _)) if open_ty == ty => {}
                _ => return Err(IngestError::IllegalBioTransition(line_no)),
            },
        }

        if index > sentence_start {
            text.push(' ');
        } else if index > 0 {
            text.push('\n');
        }
        let start = text.len();
        text.push_str(fields[0]);
        tokens.push(Token::new(fields[0], pos, start, text.len()));
    }
    close(&mut open, tokens.len(), &mut mentions);
    if tokens.len() > sentence_start {
        sentences.push(Span::new(sentence_start, tokens.len()));
    }

    let doc = Document::new(doc_id, text, tokens, sentences)?;
    let entities = mentions
        .into_iter()
        .enumerate()
        .map(|(n, (ty, span))| {
            let kind = infer_kind(&doc.tokens()[span.indices()]);
            EntityMention::new(format!("e{n}"), ty, span, kind, Provenance::Human)
        })
        .collect();
    Ok(doc.attach_annotations_for_review(entities, vec![], chains)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_bio_company() {
        let doc = read_tagged(
            "t1",
            "Sensata\tNNP\tB-Company\nTechnologies\tNNP\tI-Company\ndevelops\tVBZ\tO\nsensors\tNNS\tO\n",
        )
        .unwrap();
        assert_eq!(doc.sentences().len(), 1);
        assert_eq!(doc.tokens().len(), 4);
        assert_eq!(doc.entities().len(), 1);
        let m = &doc.entities()[0];
        assert_eq!((m.entity_type, m.span, m.kind), (EntityType::Company, Span::new(0, 2), MentionKind::Name));
        assert_eq!(m.provenance, Provenance::Human);
        assert_eq!(doc.text(), "Sensata Technologies develops sensors");
    }

    #[test]
    fn empty_input() {
        let doc = read_tagged("t", "").unwrap();
        assert!(doc.tokens().is_empty() && doc.sentences().is_empty());
    }

    #[test]
    fn missing_tag_is_malformed() {
        assert_eq!(read_tagged("t", "sensors\t").unwrap_err(), IngestError::MalformedLine(1));
        assert_eq!(read_tagged("t", "sensors").unwrap_err(), IngestError::MalformedLine(1));
        assert_eq!(read_tagged("t", "a\tDT\nb\tNN\tX-Thing").unwrap_err(), IngestError::MalformedLine(2));
    }

    #[test]
    fn inside_without_begin() {
        assert_eq!(
            read_tagged("t", "# c\nsensors\tNNS\tI-Product\n").unwrap_err(),
            IngestError::IllegalBioTransition(2)
        );
        assert_eq!(
            read_tagged("t", "Acme\tNNP\tB-Company\nsensors\tNNS\tI-Product\n").unwrap_err(),
            IngestError::IllegalBioTransition(2)
        );
    }

    #[test]
    fn sentences_and_comments() {
        let doc = read_tagged("t", "# header\nA\tDT\nb\tNN\n\n\nC\tNN\n").unwrap();
        assert_eq!(doc.sentences().len(), 2);
        assert_eq!(doc.text(), "A b\nC");
    }

    #[test]
    fn ingest_raw_text() {
        let doc = ingest_text("r", "Sensata Technologies develops sensors. BMW's Z3 sells.", &TaggerLexicon::default())
            .unwrap();
        assert_eq!(doc.sentences().len(), 2);
        let words: Vec<_> = doc.tokens().iter().map(|t| t.text.as_str()).collect();
        assert_eq!(words, ["Sensata", "Technologies", "develops", "sensors", ".", "BMW", "'s", "Z3", "sells", "."]);
        assert_eq!(doc.tokens()[6].pos, "POS");
    }
}
