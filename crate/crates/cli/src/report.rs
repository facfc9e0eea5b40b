use serde::{Deserialize, Serialize};
use srt_core::geometry::{HilbInventory, HilbertChowModel, QuotientDescription, ReductionCheck, Verdict};
use srt_core::{ComponentDescriptor, DominantWeight, GroupKind};

use crate::Config;

/// Embedded in every JSON document; matches `report.schema.json`.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub group: GroupKind,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Entry {
    pub weight: DominantWeight,
    pub h0: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Present on failure: enough data to reproduce the counterexample.
    pub witness: Option<serde_json::Value>,
    pub seed: Option<u64>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            witness: None,
            seed: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: serde_json::Value) -> Self {
        Self {
            name: name.into(),
            passed: false,
            witness: Some(witness),
            seed: None,
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> serde_json::Value) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    /// `PASS name (seed s)`, followed by the witness on failure.
    pub fn render_line(&self) -> String {
        let mut s = format!("{} {}", if self.passed { "PASS" } else { "FAIL" }, self.name);
        if let Some(seed) = self.seed {
            s.push_str(&format!(" (seed {seed})"));
        }
        if let Some(w) = self.witness.as_ref().filter(|_| !self.passed) {
            s.push_str(&format!("\n     witness: {w}"));
        }
        s.push('\n');
        s
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReductionReport {
    pub schema_version: String,
    pub input: Input,
    pub config: Config,
    /// `None` for `O(V)`.
    pub zero_fiber: Option<Vec<ComponentDescriptor>>,
    pub quotient: Option<QuotientDescription>,
    pub h0_table: Vec<H0Entry>,
    pub model: Option<HilbertChowModel>,
    pub reduction: Option<ReductionCheck>,
    pub verdict: Verdict,
    pub hilb_inventory: HilbInventory,
    /// Sorted by check name.
    pub verification: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.verification.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub schema_version: String,
    pub suite: String,
    pub config: Config,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

pub(crate) fn sort_checks(checks: &mut [CheckResult]) {
    checks.sort_by(|a, b| a.name.cmp(&b.name));
}
