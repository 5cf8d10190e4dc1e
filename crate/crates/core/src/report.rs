//! Verification report files.
//!
//! A report is a pretty-printed JSON object:
//!
//! ```text
//! {
//!   "format": "unshuffle-verification/1",
//!   "records": [ { "two_n": 6, "family": "unshuffle", ... }, ... ]
//! }
//! ```
//!
//! Records are sorted by `two_n`, then family (`unshuffle` before
//! `perfect`), and fields appear in a fixed order, so identical inputs give
//! byte-identical files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::VerificationRecord;

pub const REPORT_FORMAT: &str = "unshuffle-verification/1";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("a report needs at least one record")]
    Empty,
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported report format {0:?}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format: String,
    pub records: Vec<VerificationRecord>,
}

pub fn render_report(records: &[VerificationRecord]) -> Result<String, ReportError> {
    if records.is_empty() {
        return Err(ReportError::Empty);
    }
    let mut records = records.to_vec();
    records.sort_by_key(|r| (r.two_n, r.family));
    let report = Report {
        format: REPORT_FORMAT.to_string(),
        records,
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    Ok(text)
}

pub fn write_report(records: &[VerificationRecord], path: &Path) -> Result<(), ReportError> {
    let text = render_report(records)?;
    fs::write(path, text).map_err(|source| ReportError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse_report(text: &str) -> Result<Report, ReportError> {
    let report: Report = serde_json::from_str(text)?;
    if report.format != REPORT_FORMAT {
        return Err(ReportError::Format(report.format));
    }
    Ok(report)
}

pub fn read_report(path: &Path) -> Result<Report, ReportError> {
    let text = fs::read_to_string(path).map_err(|source| ReportError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_report(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{verify, VerifyOptions};
    use crate::shuffles::DeckSize;

    #[test]
    fn empty_is_rejected() {
        assert!(matches!(render_report(&[]), Err(ReportError::Empty)));
    }

    #[test]
    fn round_trip_and_sorting() {
        let decks = [DeckSize::new(8).unwrap(), DeckSize::new(6).unwrap()];
        let mut recs = verify(&decks, VerifyOptions::default());
        recs.reverse();
        let text = render_report(&recs).unwrap();
        let parsed = parse_report(&text).unwrap();
        let order: Vec<(usize, &str)> = parsed
            .records
            .iter()
            .map(|r| (r.two_n, r.family.name()))
            .collect();
        assert_eq!(
            order,
            [
                (6, "unshuffle"),
                (6, "perfect"),
                (8, "unshuffle"),
                (8, "perfect")
            ]
        );
        assert!(text.contains("\"match\": true"));
        assert!(text.contains("\"predicted_order\": \"48\""));
        assert_eq!(render_report(&parsed.records).unwrap(), text);
    }

    #[test]
    fn wrong_format_tag() {
        let text = r#"{"format": "other", "records": []}"#;
        assert!(matches!(parse_report(text), Err(ReportError::Format(_))));
    }
}
