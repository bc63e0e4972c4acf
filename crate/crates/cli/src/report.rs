//! The structured report document written by `--json`.
//!
//! One object per command. Every rational is an exact `"p/q"` string, field
//! order is fixed, and maps are ordered, so identical invocations serialize
//! to identical bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    /// Canonical form of the invocation, independent of argument order.
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Results,
    pub exit_status: i32,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Verify(VerifyResults),
    Chain(ChainResults),
    ChainShape(ChainShapeResults),
    Check(CheckResults),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyResults {
    /// Value of `B_1` used; `-1/2` unless the test hook flipped it.
    pub bernoulli_b1: String,
    pub levels: Vec<CheckCount>,
    pub composition_sums: CheckCount,
    pub failure_count: usize,
    /// Failures in check order, capped at [`MAX_LISTED_FAILURES`].
    pub failures: Vec<IdentityFailure>,
    pub passed: bool,
}

pub const MAX_LISTED_FAILURES: usize = 20;

/// `index` is the level `i` for identity levels and `max_n` for the
/// composition-sum suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCount {
    pub index: usize,
    pub checks: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub identity: String,
    pub location: String,
    pub lhs: String,
    pub rhs: String,
    pub discrepancy: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainResults {
    pub manifold: String,
    pub rows: Vec<ChainRow>,
    pub degree_sequence: Vec<u32>,
    pub terminal: String,
    pub n: Option<usize>,
    /// Known chain for catalogue models walked with catalogue degrees.
    pub expected_chain: Option<Vec<String>>,
    pub matches_expected: Option<bool>,
}

/// Step 0 is the starting manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRow {
    pub step: usize,
    pub label: String,
    pub dim: i64,
    pub degree: Option<u32>,
    pub scalars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainShapeResults {
    pub manifold: String,
    pub split: bool,
    pub head: Vec<String>,
    pub branches: Vec<Vec<String>>,
    pub n_lower: usize,
    pub n_upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResults {
    pub manifold: String,
    pub dim: usize,
    pub theorem: String,
    pub degree_one_cover: bool,
    pub every_family_degree_one: bool,
    pub max_m: usize,
    /// Report at the requested `m`, or at `max_m` when none was given.
    pub hypothesis: Option<HypothesisResults>,
    pub certificate: Option<CertificateResults>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisResults {
    pub m: usize,
    pub passed: bool,
    pub per_k: Vec<MarginRow>,
    pub conclusions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarginRow {
    pub k: usize,
    pub threshold: String,
    pub actual: String,
    pub margin: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateResults {
    pub mode: String,
    pub all_positive: bool,
    pub levels: Vec<CertificateLevelResults>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateLevelResults {
    pub i: usize,
    pub bounds: Vec<BoundRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub quantity: String,
    pub b_sum: String,
    pub closed: Option<String>,
    pub comparison: String,
    pub threshold: String,
    pub holds: bool,
    pub routes_agree: bool,
}
