//! Brute-force reference for the candidate grammar.

use copro_core::{Span, Token};
use rand::Rng;

const ORACLE_TAGS: &[&str] = &["NN", "NNS", "NNP", "NNPS", "JJ", "CD", "VBG", "DT", "IN", "CC", "VBZ", ",", "RB"];

fn noun(t: &str) -> bool {
    matches!(t, "NN" | "NNS" | "NNP" | "NNPS")
}

/// `(VBG|N|JJ|CD)* N+ (N|JJ|CD)*` by trying every split point.
pub fn in_grammar(tags: &[&str]) -> bool {
    let pre = |t: &str| noun(t) || matches!(t, "VBG" | "JJ" | "CD");
    let post = |t: &str| noun(t) || matches!(t, "JJ" | "CD");
    let n = tags.len();
    (0..n).any(|p| {
        (p + 1..=n).any(|q| {
            tags[..p].iter().all(|t| pre(t)) && tags[p..q].iter().all(|t| noun(t)) && tags[q..].iter().all(|t| post(t))
        })
    })
}

/// Every grammar span not contained in a longer grammar span, in order.
pub fn oracle_chunks(tags: &[&str]) -> Vec<Span> {
    let n = tags.len();
    let matching: Vec<Span> = (0..n)
        .flat_map(|i| (i + 1..=n).map(move |j| Span::new(i, j)))
        .filter(|s| in_grammar(&tags[s.indices()]))
        .collect();
    let mut out: Vec<Span> =
        matching.iter().filter(|s| !matching.iter().any(|o| o != *s && o.contains(s))).copied().collect();
    out.sort();
    out
}

pub fn random_tags<R: Rng>(rng: &mut R, max_len: usize) -> Vec<&'static str> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| ORACLE_TAGS[rng.gen_range(0..ORACLE_TAGS.len())]).collect()
}

pub fn tokens_from_tags(tags: &[&str]) -> Vec<Token> {
    tags.iter().enumerate().map(|(i, t)| Token::new("w", *t, 2 * i, 2 * i + 1)).collect()
}
