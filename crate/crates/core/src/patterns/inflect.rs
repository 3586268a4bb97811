//! Regular verb inflection with small exception tables.

const IRREGULAR_PAST: &[(&str, &str)] = &[
    ("bring", "brought"),
    ("build", "built"),
    ("buy", "bought"),
    ("do", "did"),
    ("get", "got"),
    ("give", "gave"),
    ("grow", "grew"),
    ("have", "had"),
    ("lead", "led"),
    ("make", "made"),
    ("put", "put"),
    ("run", "ran"),
    ("sell", "sold"),
    ("send", "sent"),
    ("set", "set"),
    ("spin", "spun"),
    ("take", "took"),
    ("write", "wrote"),
];

const IRREGULAR_THIRD: &[(&str, &str)] = &[("be", "is"), ("do", "does"), ("go", "goes"), ("have", "has")];

/// Verbs that double their final consonant before -ed/-ing.
const DOUBLING: &[&str] = &[
    "admit", "commit", "control", "drop", "equip", "get", "occur", "plan", "prefer", "put", "refer", "run", "set",
    "ship", "spin", "stop", "submit", "transfer",
];

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn ends_consonant_y(v: &str) -> bool {
    let mut it = v.chars().rev();
    matches!((it.next(), it.next()), (Some('y'), Some(c)) if !is_vowel(c))
}

fn doubled(v: &str) -> String {
    let last = v.chars().next_back().unwrap();
    format!("{v}{last}")
}

pub fn third_person(v: &str) -> String {
    if let Some((_, f)) = IRREGULAR_THIRD.iter().find(|(b, _)| *b == v) {
        return f.to_string();
    }
    if ends_consonant_y(v) {
        format!("{}ies", &v[..v.len() - 1])
    } else if ["s", "x", "z", "ch", "sh", "o"].iter().any(|s| v.ends_with(s)) {
        format!("{v}es")
    } else {
        format!("{v}s")
    }
}

pub fn past(v: &str) -> String {
    if let Some((_, f)) = IRREGULAR_PAST.iter().find(|(b, _)| *b == v) {
        return f.to_string();
    }
    if v.ends_with('e') {
        format!("{v}d")
    } else if ends_consonant_y(v) {
        format!("{}ied", &v[..v.len() - 1])
    } else if DOUBLING.contains(&v) {
        format!("{}ed", doubled(v))
    } else {
        format!("{v}ed")
    }
}

pub fn gerund(v: &str) -> String {
    if let Some(stem) = v.strip_suffix("ie") {
        format!("{stem}ying")
    } else if v.ends_with('e') && !["ee", "ye", "oe"].iter().any(|s| v.ends_with(s)) && v.len() > 2 {
        format!("{}ing", &v[..v.len() - 1])
    } else if DOUBLING.contains(&v) {
        format!("{}ing", doubled(v))
    } else {
        format!("{v}ing")
    }
}

/// `[base, 3sg, past, gerund]`.
pub fn inflections(verb: &str) -> [String; 4] {
    let v = verb.to_lowercase();
    [v.clone(), third_person(&v), past(&v), gerund(&v)]
}
