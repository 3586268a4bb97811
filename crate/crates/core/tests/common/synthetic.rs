//! Generated corpora with prescribed totals.

use copro_core::Corpus;

use super::golden::{build_doc, Spec};

/// Reference totals for the statistics arithmetic checks.
pub const REFERENCE_TOTALS: [u64; 6] = [152, 4001, 131929, 2191, 1717, 379];

fn share(total: u64, docs: u64, i: u64) -> u64 {
    total / docs + u64::from(i < total % docs)
}

/// A corpus whose counts add up to `[documents, sentences, words,
/// companies, products, relations]`. Every mention is a single token and
/// relation `k` of a document pairs company `k` with product `k`.
pub fn corpus_with_totals(totals: [u64; 6]) -> Corpus {
    let [docs, sentences, words, companies, products, relations] = totals;
    let docs = (0..docs)
        .map(|i| {
            let s = share(sentences, docs, i) as usize;
            let w = share(words, docs, i) as usize;
            let c = share(companies, docs, i) as usize;
            let p = share(products, docs, i) as usize;
            let r = share(relations, docs, i) as usize;
            assert!(r <= c.min(p) && w >= s + c + p);
            let mut per_sentence: Vec<Vec<String>> = vec![Vec::new(); s];
            for k in 0..c.max(p) {
                let slot = &mut per_sentence[k % s];
                if k < c {
                    slot.push("[ Acme/NNP ]C".into());
                }
                if k < p {
                    slot.push("[ widget/NN ]P".into());
                }
            }
            let mut filler = w - c - p;
            for slot in per_sentence.iter_mut() {
                if slot.is_empty() {
                    slot.push("word/NN".into());
                    filler -= 1;
                }
            }
            per_sentence[0].extend(std::iter::repeat_n("word/NN".to_string(), filler));
            let text = per_sentence.iter().map(|s| s.join(" ")).collect::<Vec<_>>().join(" || ");
            let mut spec = Spec {
                id: Box::leak(format!("synthetic-{i:03}").into_boxed_str()),
                text: Box::leak(text.into_boxed_str()),
                relations: vec![],
                chains: vec![],
            };
            // mention numbering follows opening order: sentence by sentence
            let mut order = Vec::new();
            for k in 0..c.max(p) {
                order.push((k % s, k / s, k, k < c, k < p));
            }
            order.sort();
            let (mut company_ix, mut product_ix) = (vec![0; c], vec![0; p]);
            let mut n = 0;
            for (_, _, k, has_c, has_p) in order {
                if has_c {
                    company_ix[k] = n;
                    n += 1;
                }
                if has_p {
                    product_ix[k] = n;
                    n += 1;
                }
            }
            for k in 0..r {
                spec = spec.rel(company_ix[k], &[product_ix[k]], None);
            }
            build_doc(&spec)
        })
        .collect();
    Corpus::new(docs).unwrap()
}
