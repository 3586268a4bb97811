#![allow(dead_code)]

pub mod golden;
pub mod oracle;
pub mod synthetic;

use std::path::PathBuf;

use copro_core::ingest::{read_tagged, OrgGazetteer};
use copro_core::patterns::default_config;
use copro_core::{Document, Preannotation, Preannotator};

pub fn workspace_data() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn load_tagged(rel: &str) -> Document {
    let path = workspace_data().join(rel);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let id = path.file_stem().unwrap().to_string_lossy().into_owned();
    read_tagged(&id, &text).unwrap()
}

pub fn gazetteer() -> OrgGazetteer {
    OrgGazetteer::parse(&std::fs::read_to_string(workspace_data().join("gazetteer.txt")).unwrap())
}

pub fn preannotator() -> Preannotator {
    Preannotator::new(&default_config(), gazetteer())
}

pub fn annotate(rel: &str) -> Preannotation {
    preannotator().annotate(&load_tagged(rel)).unwrap()
}

/// (company, trigger, products) surface strings for every relation.
pub fn relation_surfaces(doc: &Document) -> Vec<(String, String, Vec<String>)> {
    let by_id = doc.mention_index();
    doc.relations()
        .iter()
        .map(|r| {
            let company = doc.surface(by_id[r.company.as_str()].span).to_string();
            let trigger = r.trigger.map(|t| doc.surface(t).to_string()).unwrap_or_default();
            let products = r.products.iter().map(|p| doc.surface(by_id[p.as_str()].span).to_string()).collect();
            (company, trigger, products)
        })
        .collect()
}

pub fn rel(company: &str, trigger: &str, products: &[&str]) -> (String, String, Vec<String>) {
    (company.into(), trigger.into(), products.iter().map(|p| p.to_string()).collect())
}
