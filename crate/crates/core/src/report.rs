//! Outcome records for every verification routine.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Where and how an identity failed. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub description: String,
    pub indices: Vec<usize>,
    pub left: String,
    pub right: String,
}

impl Counterexample {
    pub fn new(
        description: impl Into<String>,
        indices: Vec<usize>,
        left: impl fmt::Display,
        right: impl fmt::Display,
    ) -> Self {
        Self {
            description: description.into(),
            indices,
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}

/// Result of one path of a check: `Ok` when the identity held everywhere.
pub type Outcome = Result<(), Counterexample>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub params: BTreeMap<String, u64>,
    pub pass: bool,
    /// Verdict of the grid-permutation path, when the check has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation_path: Option<bool>,
    /// Verdict of the sparse-matrix path, when the check has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_path: Option<bool>,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub(crate) fn params<const N: usize>(pairs: [(&str, usize); N]) -> BTreeMap<String, u64> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v as u64))
        .collect()
}

impl VerificationReport {
    /// Report for a single-path check.
    pub fn single(
        check_name: &str,
        params: BTreeMap<String, u64>,
        outcome: Outcome,
        started: Instant,
    ) -> Self {
        Self {
            check_name: check_name.to_string(),
            params,
            pass: outcome.is_ok(),
            permutation_path: None,
            matrix_path: None,
            counterexample: outcome.err(),
            elapsed: started.elapsed(),
        }
    }

    /// Report for a check run along both the permutation and the matrix path.
    /// A disagreement between the paths fails the check as an internal
    /// inconsistency, distinct from an identity failure.
    pub fn dual(
        check_name: &str,
        params: BTreeMap<String, u64>,
        permutation: Outcome,
        matrix: Outcome,
        started: Instant,
    ) -> Self {
        let (perm_ok, mat_ok) = (permutation.is_ok(), matrix.is_ok());
        let counterexample = match (permutation, matrix) {
            (Ok(()), Ok(())) => None,
            (Err(_), Err(c)) => Some(c),
            (Ok(()), Err(c)) => Some(Counterexample {
                description: format!(
                    "internal inconsistency: permutation path passed, matrix path failed: {}",
                    c.description
                ),
                ..c
            }),
            (Err(c), Ok(())) => Some(Counterexample {
                description: format!(
                    "internal inconsistency: matrix path passed, permutation path failed: {}",
                    c.description
                ),
                ..c
            }),
        };
        Self {
            check_name: check_name.to_string(),
            params,
            pass: counterexample.is_none(),
            permutation_path: Some(perm_ok),
            matrix_path: Some(mat_ok),
            counterexample,
            elapsed: started.elapsed(),
        }
    }

    /// Whether both paths were run and disagree.
    pub fn is_inconsistent(&self) -> bool {
        matches!((self.permutation_path, self.matrix_path), (Some(a), Some(b)) if a != b)
    }

    /// One JSON object on one line. Timing is omitted unless requested so
    /// that identical configurations give identical output.
    pub fn to_json_line(&self, with_timing: bool) -> String {
        let mut value = serde_json::to_value(self).expect("report is serializable");
        if with_timing {
            value["elapsed_ms"] = serde_json::json!(self.elapsed.as_secs_f64() * 1e3);
        }
        value.to_string()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.pass { "PASS" } else { "FAIL" }, self.check_name)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, ": {} at {:?}: left {} right {}", c.description, c.indices, c.left, c.right)?;
        }
        Ok(())
    }
}
