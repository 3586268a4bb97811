//! Company and product mention annotation toolkit: ingest, candidate
//! chunking, pattern-based pre-annotation, guideline validation, corpus
//! statistics and serialization.

pub mod analytics;
pub mod chunker;
pub mod corpus_io;
pub mod ingest;
pub mod model;
pub mod patterns;
pub mod pipeline;
pub mod validator;

pub use model::*;
pub use pipeline::{Preannotation, Preannotator};
