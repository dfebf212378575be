//! Claim results and the aggregated verification report.
//!
//! Reports serialize to JSON with a fixed field order and sorted witness maps,
//! so a report is byte-identical across repeated runs with the same inputs.
//! Timings are attached only on request, since they would break that
//! reproducibility.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Verified,
    Failed,
    Skipped,
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Failed => "failed",
            ClaimStatus::Skipped => "skipped",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub paper_anchor: String,
    pub status: ClaimStatus,
    pub witnesses: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Incremental claim evaluation: checks record witnesses as they go; any
/// violated check marks the claim failed and records a concrete witness.
#[derive(Debug, Default)]
pub struct ClaimCheck {
    witnesses: BTreeMap<String, String>,
    failures: usize,
}

impl ClaimCheck {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.witnesses.insert(key.into(), value.into());
    }

    /// Require `ok`; on failure record the witness under `FAIL:<label>`.
    pub fn require(&mut self, ok: bool, label: &str, witness: impl Into<String>) {
        if ok {
            self.witnesses.insert(label.to_string(), witness.into());
        } else {
            self.failures += 1;
            self.witnesses
                .insert(format!("FAIL:{label}"), witness.into());
        }
    }

    pub fn fail(&mut self, label: &str, witness: impl Into<String>) {
        self.require(false, label, witness);
    }

    pub fn finish(self, claim_id: impl Into<String>, paper_anchor: impl Into<String>) -> ClaimResult {
        let status = if self.failures == 0 {
            ClaimStatus::Verified
        } else {
            ClaimStatus::Failed
        };
        ClaimResult {
            claim_id: claim_id.into(),
            paper_anchor: paper_anchor.into(),
            status,
            witnesses: self.witnesses,
            elapsed_ms: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub cases: Vec<String>,
    pub primes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corruption: Option<String>,
    pub verdict: &'static str,
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn assemble(
        cases: Vec<String>,
        primes: Vec<u64>,
        corruption: Option<String>,
        claims: Vec<ClaimResult>,
    ) -> VerificationReport {
        let verified = claims
            .iter()
            .all(|c| !matches!(c.status, ClaimStatus::Failed));
        VerificationReport {
            schema: "defring-report/1",
            cases,
            primes,
            corruption,
            verdict: if verified { "verified" } else { "failed" },
            claims,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == "verified"
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
