//! Hand-encoded annotations of the example bracketings.
//!
//! Sentence notation: `word/TAG` tokens; `[` opens a mention, `]C` / `]P`
//! closes it as Company / Product; `<` ... `>` marks a trigger; `||`
//! separates sentences. Mentions are numbered m0, m1, ... by opening
//! bracket, triggers t0, t1, ... by `<`.

use copro_core::validator::RuleId;
use copro_core::{
    Corpus, Document, EntityMention, EntityType, IdentityChain, MentionKind, Provenance, RelationMention, Span, Token,
};

pub struct Spec {
    pub id: &'static str,
    pub text: &'static str,
    /// (company mention, product mentions, trigger)
    pub relations: Vec<(usize, Vec<usize>, Option<usize>)>,
    /// (source mention, target mentions)
    pub chains: Vec<(usize, Vec<usize>)>,
}

pub fn spec(id: &'static str, text: &'static str) -> Spec {
    Spec { id, text, relations: vec![], chains: vec![] }
}

impl Spec {
    pub fn rel(mut self, company: usize, products: &[usize], trigger: Option<usize>) -> Self {
        self.relations.push((company, products.to_vec(), trigger));
        self
    }

    pub fn chain(mut self, source: usize, targets: &[usize]) -> Self {
        self.chains.push((source, targets.to_vec()));
        self
    }
}

pub struct Parsed {
    pub tokens: Vec<Token>,
    pub text: String,
    pub sentences: Vec<Span>,
    /// (type, span) in opening order
    pub mentions: Vec<(EntityType, Span)>,
    pub triggers: Vec<Span>,
}

pub fn parse(notation: &str) -> Parsed {
    let mut p = Parsed { tokens: vec![], text: String::new(), sentences: vec![], mentions: vec![], triggers: vec![] };
    let mut open: Vec<(usize, usize)> = Vec::new(); // (mention slot, start)
    let mut trig_start = None;
    let mut sentence_start = 0;
    for item in notation.split_whitespace() {
        let n = p.tokens.len();
        match item {
            "[" => {
                p.mentions.push((EntityType::Company, Span::new(n, n)));
                open.push((p.mentions.len() - 1, n));
            }
            "]C" | "]P" => {
                let (slot, start) = open.pop().expect("unbalanced ]");
                let ty = if item == "]C" { EntityType::Company } else { EntityType::Product };
                p.mentions[slot] = (ty, Span::new(start, n));
            }
            "<" => trig_start = Some(n),
            ">" => p.triggers.push(Span::new(trig_start.take().expect("unbalanced >"), n)),
            "||" => {
                p.sentences.push(Span::new(sentence_start, n));
                sentence_start = n;
            }
            tok => {
                let (w, t) = tok.rsplit_once('/').expect("word/TAG");
                if n > sentence_start {
                    p.text.push(' ');
                } else if n > 0 {
                    p.text.push('\n');
                }
                let start = p.text.len();
                p.text.push_str(w);
                p.tokens.push(Token::new(w, t, start, p.text.len()));
            }
        }
    }
    assert!(open.is_empty() && trig_start.is_none(), "unbalanced brackets in {notation}");
    if p.tokens.len() > sentence_start {
        p.sentences.push(Span::new(sentence_start, p.tokens.len()));
    }
    p
}

fn kind(tokens: &[Token]) -> MentionKind {
    if tokens.iter().all(|t| t.pos == "PRP") {
        MentionKind::Pronominal
    } else if tokens.iter().any(|t| matches!(t.pos.as_str(), "NNP" | "NNPS")) {
        MentionKind::Name
    } else {
        MentionKind::Nominal
    }
}

pub fn build_doc(s: &Spec) -> Document {
    build(s, true)
}

/// Like [`build_doc`] but only structural invariants are enforced.
pub fn build_review_doc(s: &Spec) -> Document {
    build(s, false)
}

fn build(s: &Spec, strict: bool) -> Document {
    let p = parse(s.text);
    let doc = Document::new(s.id, p.text.clone(), p.tokens.clone(), p.sentences.clone()).unwrap();
    let entities = p
        .mentions
        .iter()
        .enumerate()
        .map(|(i, (ty, span))| {
            EntityMention::new(format!("m{i}"), *ty, *span, kind(&p.tokens[span.indices()]), Provenance::Human)
        })
        .collect();
    let relations = s
        .relations
        .iter()
        .enumerate()
        .map(|(i, (c, ps, t))| RelationMention {
            id: format!("r{i}"),
            company: format!("m{c}"),
            products: ps.iter().map(|p| format!("m{p}")).collect(),
            trigger: t.map(|t| p.triggers[t]),
            provenance: Provenance::Human,
            pattern_id: None,
        })
        .collect();
    let chains = s
        .chains
        .iter()
        .enumerate()
        .map(|(i, (src, ts))| IdentityChain {
            id: format!("i{i}"),
            source: format!("m{src}"),
            targets: ts.iter().map(|t| format!("m{t}")).collect(),
        })
        .collect();
    let doc = if strict {
        doc.attach_annotations(entities, relations, chains)
    } else {
        doc.attach_annotations_for_review(entities, relations, chains)
    };
    doc.unwrap_or_else(|e| panic!("{}: {e}", s.id))
}

pub fn bracketing_specs() -> Vec<Spec> {
    vec![
        spec("table1-row1", "[ BMW/NNP ]C < 's/POS > [ 1-Series/NNP Convertible/NNP ]P is/VBZ a/DT stylish/JJ convertible/NN ./.")
            .rel(0, &[1], Some(0)),
        spec("table1-row2", "[ Intuition/NNP Executive/NNP ]P < by/IN > [ Honeywell/NNP ]C collects/VBZ and/CC analyzes/VBZ large/JJ amounts/NNS of/IN data/NNS ./.")
            .rel(1, &[0], Some(0)),
        spec("table1-row3", "[ Sensata/NNP Technologies/NNPS ]C < develops/VBZ > [ sensors/NNS ]P and/CC [ controls/NNS ]P ./.")
            .rel(0, &[1, 2], Some(0)),
        spec("table1-row4", "[ Amazon/NNP ]C is/VBZ a/DT < vendor/NN of/IN > [ books/NNS ]P and/CC [ technology/NN products/NNS ]P ./.")
            .rel(0, &[1, 2], Some(0)),
        spec("table1-row5", "[ Apple/NNP ]C and/CC [ Samsung/NNP ]C are/VBP [ smartphone/NN ]P < providers/NNS > ./.")
            .rel(0, &[2], Some(0))
            .rel(1, &[2], Some(0)),
    ]
}

pub fn relation_specs() -> Vec<Spec> {
    vec![
        spec("ex8a", "[ Parkifi/NNP ]C is/VBZ a/DT fast-growing/JJ technology/NN company/NN focused/VBN on/IN < providing/VBG > their/PRP$ customers/NNS with/IN [ real-time/JJ parking/NN data/NNS ]P ./.")
            .rel(0, &[1], Some(0)),
        spec("ex8b", "[ Sensata/NNP Technologies/NNPS Holding/NNP ]C < produces/VBZ > [ sensors/NNS ]P ./.").rel(0, &[1], Some(0)),
        spec("ex8c", "[ BMW/NNP ]C < 's/POS > [ Z3/NNP ]P was/VBD a/DT roadster/NN ./.").rel(0, &[1], Some(0)),
        spec("ex8d", "[ Intuition/NNP Executive/NNP ]P < by/IN > [ Honeywell/NNP ]C collects/VBZ and/CC analyzes/VBZ large/JJ amounts/NNS of/IN data/NNS ./.")
            .rel(1, &[0], Some(0)),
        spec("ex8e", "[ [ Apple/NNP ]C Watch/NNP Series/NNP 2/CD ]P is/VBZ available/JJ now/RB ./.").rel(1, &[0], None),
        spec("ex9", "[ IS/NNP International/NNP Services/NNPS LLC/NNP ]C (/( [ IS/NNP ]C )/) is/VBZ a/DT uniquely/RB qualified/JJ business/NN < providing/VBG > [ engineering/NN services/NNS ]P ./.")
            .rel(0, &[2], Some(0))
            .chain(0, &[1]),
        spec("ex10", "FUJIFILM/NNP invested/VBD in/IN [ Japan/NNP Biomedical/NNP Co./NNP ]C ,/, a/DT < developer/NN > ,/, < manufacturer/NN > and/CC < vendor/NN > of/IN [ additives/NNS for/IN cell/NN culture/NN media/NNS ]P ./.")
            .rel(0, &[1], Some(0))
            .rel(0, &[1], Some(1))
            .rel(0, &[1], Some(2)),
    ]
}

/// Extent examples without relations, one sentence per bracketed item.
pub fn extent_specs() -> Vec<Spec> {
    vec![
        spec("ex1", "highly/RB accurate/JJ [ 3D/JJ magnetic/JJ sensor/NN ]P || advanced/JJ [ magnetic-hydraulic/JJ circuit/NN breakers/NNS ]P || [ Rambus/NNP ]C '/POS [ R+/NNP ]P industry-standard/JJ [ interface/NN solutions/NNS ]P"),
        spec("ex2", "advanced/JJ [ sensors/NNS ]P || [ magnetic/JJ sensors/NNS ]P"),
        spec("ex3", "[ vehicle/NN ]P || [ SUV/NNP ]P || [ Land/NNP Cruiser/NNP ]P || [ Toyota/NNP Land/NNP Cruiser/NNP ]P || [ Toyota/NNP Land/NNP Cruiser/NNP 100/CD Series/NNP VX/NNP ]P || [ Toyota/NNP Land/NNP Cruiser/NNP 100/CD Series/NNP VX/NNP SUV/NNP ]P"),
        spec("ex4", "[ AP3405/NNP ]P || [ 1500/CD ECL-PTU-208/NNP ]P || [ Samsung/NNP 14nm/JJ LPP/NNP Process/NNP ]P"),
        spec("ex5", "[ smart/JJ sensors/NNS ]P || [ communicating/VBG sensors/NNS ]P || [ vision/NN sensors/NNS ]P || [ Hall/NNP sensors/NNS ]P"),
        spec("ex6", "[ sensors/NNS ]P || [ Kleenex/NNP ]P || [ Q7/NNP ]P || [ Audi/NNP Q7/NNP ]P || [ Innocent/NNP Drinks/NNPS smoothies/NNS ]P || [ white/JJ iPhone/NNP 6/CD ]P || [ Toyota/NNP Land/NNP Cruiser/NNP 100/CD Series/NNP VX/NNP SUV/NNP diesel/NN turbo/NN ]P"),
        spec("ex7a", "[ semiconductor/NN ]P and/CC [ IP/NNP products/NNS ]P"),
        spec("ex7c", "[ wireless/JJ and/CC self-powered/JJ LED/NNP controls/NNS ]P"),
        spec("table2", "[ Dunlop/NNP Sport/NNP M3/NNP winters/NNS ]P || [ Apple/NNP iPhone/NNP 6S/NNP ]P || [ VW/NNP Golf/NNP VII/NNP ]P || [ BMW/NNP i8/NNP ]P || [ McRib/NNP ®/SYM ]P || [ Nike/NNP Air/NNP Max/NNP 2016/CD running/VBG shoes/NNS ]P || [ 2006/CD Ford/NNP Mustang/NNP GT/NNP Convertible/NNP 2-Door/JJ ]P || [ Samsung/NNP Galaxy/NNP S7/NNP 32/CD GB/NNP black/JJ ]P"),
    ]
}

pub fn golden_corpus() -> Corpus {
    let docs = bracketing_specs().iter().chain(&relation_specs()).chain(&extent_specs()).map(build_doc).collect();
    Corpus::new(docs).unwrap()
}

/// One fixture per rule, each firing exactly that rule.
pub fn negative_fixtures() -> Vec<(RuleId, Spec)> {
    vec![
        (RuleId::V1, spec("neg-v1", "Acme/NNP sells/VBZ [ the/DT sensors/NNS ]P ./.")),
        (RuleId::V2, spec("neg-v2", "[ [ BMW/NNP ]C 's/POS Z3/NNP ]P is/VBZ fast/JJ ./.")),
        (
            RuleId::V3,
            spec("neg-v3", "[ Acme/NNP ]C < makes/VBZ > things/NNS ./. || It/PRP sells/VBZ [ sensors/NNS ]P ./.")
                .rel(0, &[1], Some(0)),
        ),
        (
            RuleId::V4,
            spec("neg-v4", "[ the/DT firm/NN ]C ,/, [ Acme/NNP ]C ,/, grows/VBZ ./.").chain(0, &[1]),
        ),
        (RuleId::V5, spec("neg-v5", "Acme/NNP sells/VBZ [ smartphones/NNS ]P ./. || Smartphones/NNS are/VBP popular/JJ ./.")),
        (
            RuleId::V6,
            spec("neg-v6", "[ IS/NNP International/NNP Services/NNPS LLC/NNP ]C (/( [ IS/NNP ]C )/) < provides/VBZ > [ staffing/NN ]P ./.")
                .rel(0, &[2], Some(0))
                .rel(1, &[2], Some(0))
                .chain(0, &[1]),
        ),
        (RuleId::V7, spec("neg-v7", "Acme/NNP makes/VBZ [ analog/JJ ]P chips/NNS ./.")),
        (RuleId::V8, spec("neg-v8", "Acme/NNP makes/VBZ [ advanced/JJ sensors/NNS ]P ./.")),
        (
            RuleId::V9,
            spec("neg-v9", "[ Acme/NNP ]C is/VBZ a/DT < developer/NN ,/, manufacturer/NN > of/IN [ sensors/NNS ]P ./.")
                .rel(0, &[1], Some(0)),
        ),
    ]
}
