//! Validation reports: deterministic, witness-carrying check records.
//!
//! Every validator in this crate produces a [`ValidationReport`]: one record
//! per axiom family, each naming the law it checks, whether it held, how many
//! instances were examined and by what method, and — on failure — the ids of
//! the cells witnessing the first violations found.  Records are sorted
//! lexicographically by name so that serialising the same report twice yields
//! byte-identical output.

use serde::{Deserialize, Serialize};

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// How the instances of a check were covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMethod {
    /// Every instance of the law was evaluated directly.
    Exhaustive,
    /// The law holds because the cells at this dimension are determined by
    /// their boundaries and the operations are defined facewise, so each
    /// instance reduces to already-checked instances one dimension down.
    FacewiseReduction,
    /// The cells at this dimension are reconstructed canonically from lower
    /// dimensions, and the law holds by that construction over checked lower
    /// dimensions.
    CoskeletalConstruction,
}

/// A single named check with its outcome and witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    /// Sortable slug, e.g. `"comp/assoc@dim2"`.
    pub name: String,
    /// Human-readable statement of the law being checked.
    pub law: String,
    pub status: CheckStatus,
    /// Number of instances covered by `method`.
    pub instances: u64,
    pub method: CheckMethod,
    /// Ids of cells witnessing a violation (empty on pass).  At most
    /// [`MAX_WITNESSES`] are retained per record.
    pub witness: Vec<String>,
}

/// Cap on retained witnesses per record, keeping reports readable.
pub const MAX_WITNESSES: usize = 8;

/// A deterministic bundle of check records for one structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// Id of the structure that was checked.
    pub structure: String,
    pub checks: Vec<CheckRecord>,
}

impl ValidationReport {
    pub fn new(structure: impl Into<String>) -> Self {
        ValidationReport {
            structure: structure.into(),
            checks: Vec::new(),
        }
    }

    /// Record a passing check.
    pub fn pass(
        &mut self,
        name: impl Into<String>,
        law: impl Into<String>,
        instances: u64,
        method: CheckMethod,
    ) {
        self.checks.push(CheckRecord {
            name: name.into(),
            law: law.into(),
            status: CheckStatus::Pass,
            instances,
            method,
            witness: Vec::new(),
        });
    }

    /// Record a failing check with witnesses (truncated to [`MAX_WITNESSES`]).
    pub fn fail(
        &mut self,
        name: impl Into<String>,
        law: impl Into<String>,
        instances: u64,
        method: CheckMethod,
        mut witness: Vec<String>,
    ) {
        witness.truncate(MAX_WITNESSES);
        self.checks.push(CheckRecord {
            name: name.into(),
            law: law.into(),
            status: CheckStatus::Fail,
            instances,
            method,
            witness,
        });
    }

    /// Record an outcome from a collected list of violation witnesses.
    pub fn outcome(
        &mut self,
        name: impl Into<String>,
        law: impl Into<String>,
        instances: u64,
        method: CheckMethod,
        witness: Vec<String>,
    ) {
        if witness.is_empty() {
            self.pass(name, law, instances, method);
        } else {
            self.fail(name, law, instances, method, witness);
        }
    }

    /// Append all records of `other` to `self`.
    pub fn merge(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }

    /// True when every record passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    /// All failing records.
    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }

    /// Sort records lexicographically by name (then law) for deterministic
    /// output.  Called by every validator before returning.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| {
            a.name
                .cmp(&b.name)
                .then_with(|| a.law.cmp(&b.law))
        });
        self
    }

    /// Canonical JSON rendering (stable field order, sorted records).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_sort_and_serialize_deterministically() {
        let mut r = ValidationReport::new("s");
        r.pass("b/check", "second", 1, CheckMethod::Exhaustive);
        r.fail(
            "a/check",
            "first",
            2,
            CheckMethod::Exhaustive,
            vec!["w1".into()],
        );
        let r = r.finish();
        assert_eq!(r.checks[0].name, "a/check");
        assert!(!r.passed());
        let again = r.clone().finish();
        assert_eq!(r.to_json(), again.to_json());
    }

    #[test]
    fn witnesses_are_capped() {
        let mut r = ValidationReport::new("s");
        let many: Vec<String> = (0..100).map(|i| format!("w{i}")).collect();
        r.fail("x", "law", 100, CheckMethod::Exhaustive, many);
        assert_eq!(r.checks[0].witness.len(), MAX_WITNESSES);
    }
}
