//! Deterministic whitespace/punctuation tokenizer with byte offsets.

const EDGE_PUNCT: &[char] = &['.', ',', ';', ':', '!', '?', '(', ')', '"', '\''];
const TRADEMARKS: &[char] = &['®', '™'];

/// Words whose trailing period belongs to the word.
const ABBREVIATIONS: &[&str] = &[
    "Inc.", "Corp.", "Ltd.", "Co.", "Bros.", "Mfg.", "Intl.", "Mr.", "Mrs.", "Ms.", "Dr.", "Prof.", "St.", "Jr.",
    "Sr.", "vs.", "e.g.", "i.e.", "etc.", "approx.", "No.",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawToken {
    pub text: String,
    pub start: usize,
    pub end: usize,
}

/// Splits on whitespace, then peels leading/trailing punctuation, the
/// possessive clitic `'s` and trademark symbols into their own tokens.
/// Internal hyphens are kept.
pub fn tokenize(text: &str) -> Vec<RawToken> {
    let mut out = Vec::new();
    let mut word_start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = word_start.take() {
                split_word(text, s, i, &mut out);
            }
        } else if word_start.is_none() {
            word_start = Some(i);
        }
    }
    if let Some(s) = word_start {
        split_word(text, s, text.len(), &mut out);
    }
    out
}

fn split_word(text: &str, start: usize, end: usize, out: &mut Vec<RawToken>) {
    // trademark symbols split the word wherever they occur
    let mut piece_start = start;
    for (off, c) in text[start..end].char_indices() {
        if TRADEMARKS.contains(&c) {
            let at = start + off;
            if piece_start < at {
                split_piece(text, piece_start, at, out);
            }
            push(text, at, at + c.len_utf8(), out);
            piece_start = at + c.len_utf8();
        }
    }
    if piece_start < end {
        split_piece(text, piece_start, end, out);
    }
}

fn split_piece(text: &str, mut start: usize, mut end: usize, out: &mut Vec<RawToken>) {
    while start < end {
        let c = text[start..end].chars().next().unwrap();
        if EDGE_PUNCT.contains(&c) && !is_possessive(&text[start..end]) {
            push(text, start, start + c.len_utf8(), out);
            start += c.len_utf8();
        } else {
            break;
        }
    }

    let mut tail = Vec::new();
    while start < end {
        let word = &text[start..end];
        if word.len() > 2 && (word.ends_with("'s") || word.ends_with("’s")) {
            let clitic = if word.ends_with("'s") { 2 } else { "’s".len() };
            tail.push((end - clitic, end));
            end -= clitic;
            continue;
        }
        let c = word.chars().next_back().unwrap();
        if EDGE_PUNCT.contains(&c) && !is_possessive(word) && !keeps_period(word) {
            tail.push((end - c.len_utf8(), end));
            end -= c.len_utf8();
        } else {
            break;
        }
    }
    if start < end {
        push(text, start, end, out);
    }
    for (s, e) in tail.into_iter().rev() {
        push(text, s, e, out);
    }
}

fn is_possessive(word: &str) -> bool {
    word == "'s" || word == "’s"
}

fn keeps_period(word: &str) -> bool {
    if !word.ends_with('.') || word.len() < 2 {
        return false;
    }
    if ABBREVIATIONS.contains(&word) {
        return true;
    }
    // initialisms such as U.S. or U.K.
    let inner = &word[..word.len() - 1];
    inner.contains('.') && inner.split('.').all(|p| p.chars().count() <= 2 && p.chars().all(char::is_alphabetic))
}

fn push(text: &str, start: usize, end: usize, out: &mut Vec<RawToken>) {
    out.push(RawToken { text: text[start..end].to_string(), start, end });
}

/// Sentence boundaries (token ranges) after standalone `.`, `!` and `?`
/// tokens, absorbing directly following closing quotes and brackets.
pub fn split_sentences(tokens: &[RawToken]) -> Vec<crate::model::Span> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < tokens.len() {
        if matches!(tokens[i].text.as_str(), "." | "!" | "?") {
            let mut end = i + 1;
            while end < tokens.len() && matches!(tokens[end].text.as_str(), "\"" | ")" | "'") {
                end += 1;
            }
            out.push(crate::model::Span::new(start, end));
            start = end;
            i = end;
        } else {
            i += 1;
        }
    }
    if start < tokens.len() {
        out.push(crate::model::Span::new(start, tokens.len()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn words(text: &str) -> Vec<String> {
        tokenize(text).into_iter().map(|t| t.text).collect()
    }

    #[test]
    fn possessive_is_split() {
        assert_eq!(words("BMW's Z3"), ["BMW", "'s", "Z3"]);
    }

    #[test]
    fn hyphens_are_kept() {
        assert_eq!(words("mixed-signal circuits"), ["mixed-signal", "circuits"]);
    }

    #[test]
    fn trademark_is_split() {
        assert_eq!(words("McRib®"), ["McRib", "®"]);
        assert_eq!(words("Foo™ bar"), ["Foo", "™", "bar"]);
    }

    #[test]
    fn punctuation_and_abbreviations() {
        assert_eq!(
            words("Japan Biomedical Co., a developer (IS)."),
            ["Japan", "Biomedical", "Co.", ",", "a", "developer", "(", "IS", ")", "."]
        );
        assert_eq!(words("Sensata Technologies' products"), ["Sensata", "Technologies", "'", "products"]);
        assert_eq!(words("made in the U.S. today"), ["made", "in", "the", "U.S.", "today"]);
        assert_eq!(words("\"quoted\""), ["\"", "quoted", "\""]);
    }

    #[test]
    fn sentences_split_on_terminators() {
        let toks = tokenize("Acme sells tools. It works!  Done");
        let spans = split_sentences(&toks);
        assert_eq!(
            spans,
            vec![crate::model::Span::new(0, 4), crate::model::Span::new(4, 7), crate::model::Span::new(7, 8)]
        );
    }

    proptest! {
        #[test]
        fn offsets_are_faithful(text in "[a-zA-Z0-9'.,;:!?()\"® -]{0,40}") {
            let toks = tokenize(&text);
            let mut prev = 0;
            for t in &toks {
                prop_assert!(t.start >= prev);
                prop_assert!(t.start < t.end);
                prop_assert_eq!(&text[t.start..t.end], t.text.as_str());
                // only whitespace between tokens
                prop_assert!(text[prev..t.start].chars().all(char::is_whitespace));
                prev = t.end;
            }
            prop_assert!(text[prev..].chars().all(char::is_whitespace));
        }
    }
}
