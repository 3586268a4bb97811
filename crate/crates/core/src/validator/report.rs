use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use super::{Severity, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Tsv,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown report format {0:?} (expected text or tsv)")]
pub struct UnknownFormat(pub String);

impl FromStr for ReportFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "tsv" => Ok(ReportFormat::Tsv),
            other => Err(UnknownFormat(other.to_string())),
        }
    }
}

/// Renders one line per violation, in the order given.
pub fn report(violations: &[Violation], format: ReportFormat) -> String {
    let mut out = String::new();
    for v in violations {
        let message = v.message.replace(['\t', '\n'], " ");
        match format {
            ReportFormat::Tsv => {
                let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", v.doc_id, v.rule_id, v.severity, v.span, message);
            }
            ReportFormat::Text => {
                let _ =
                    writeln!(out, "{} {} {:<7} {} [{}] {}", v.doc_id, v.rule_id, v.severity, v.span, v.target, message);
            }
        }
    }
    out
}

/// 0 when no Error-level violation is present, 1 otherwise.
pub fn exit_code(violations: &[Violation]) -> i32 {
    i32::from(violations.iter().any(|v| v.severity == Severity::Error))
}
