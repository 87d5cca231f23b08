//! Check reports: one record per verified identity.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// A recorded, non-failing discrepancy between a matrix derived from the
    /// defining formulas and the matrix as printed.
    #[serde(rename = "erratum-note")]
    ErratumNote,
}

/// One verified identity: reference, inputs, residual against tolerance.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub paper_ref: String,
    pub inputs: BTreeMap<String, String>,
    pub residual: f64,
    pub tolerance: f64,
    pub status: Status,
    pub detail: String,
}

impl CheckReport {
    /// Builds a pass/fail record; the status is derived from the residual so
    /// the two can never disagree.
    pub fn graded(
        id: &str,
        paper_ref: &str,
        residual: f64,
        tolerance: f64,
        detail: impl Into<String>,
        inputs: BTreeMap<String, String>,
    ) -> Self {
        let status = if residual <= tolerance { Status::Pass } else { Status::Fail };
        CheckReport {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            inputs,
            residual,
            tolerance,
            status,
            detail: detail.into(),
        }
    }

    /// A non-failing note documenting a transcription conflict.
    pub fn erratum(
        id: &str,
        paper_ref: &str,
        detail: impl Into<String>,
        inputs: BTreeMap<String, String>,
    ) -> Self {
        CheckReport {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            inputs,
            residual: 0.0,
            tolerance: 0.0,
            status: Status::ErratumNote,
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// One-line JSON encoding; field order is fixed by the struct.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// Human-readable single line.
    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::ErratumNote => "note",
        };
        format!(
            "[{status}] {id}  residual={res:.3e} tol={tol:.3e}  ({pref}) {detail}",
            status = status,
            id = self.id,
            res = self.residual,
            tol = self.tolerance,
            pref = self.paper_ref,
            detail = self.detail,
        )
    }
}

/// Convenience builder for the `inputs` map with deterministic key order.
pub fn inputs(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_residual() {
        let ok = CheckReport::graded("a/x", "Eq. (0)", 1e-12, 1e-9, "", inputs(&[]));
        assert_eq!(ok.status, Status::Pass);
        let bad = CheckReport::graded("a/y", "Eq. (0)", 1e-3, 1e-9, "", inputs(&[]));
        assert_eq!(bad.status, Status::Fail);
        assert!(!bad.passed());
        let note = CheckReport::erratum("a/z", "Eq. (0)", "sign flip", inputs(&[]));
        assert!(note.passed());
    }

    #[test]
    fn json_is_one_object_per_line() {
        let r = CheckReport::graded(
            "a/x",
            "Eq. (1)",
            0.0,
            1e-9,
            "d",
            inputs(&[("mass", "1".into())]),
        );
        let s = r.to_json();
        assert!(s.starts_with('{') && s.ends_with('}'));
        assert!(!s.contains('\n'));
        assert!(s.contains("\"paper_ref\":\"Eq. (1)\""));
    }
}
