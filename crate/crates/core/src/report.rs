//! Structured pass/fail records for exhaustive verification sweeps.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use crate::partition::Partition;

/// At most this many counterexamples are kept; the rest are only counted.
pub const MAX_STORED_FAILURES: usize = 64;

/// A value attached to a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Partition(Partition),
    Integer(BigInt),
    Text(String),
}

impl From<Partition> for Witness {
    fn from(p: Partition) -> Self {
        Witness::Partition(p)
    }
}

impl From<&Partition> for Witness {
    fn from(p: &Partition) -> Self {
        Witness::Partition(p.clone())
    }
}

impl From<BigInt> for Witness {
    fn from(v: BigInt) -> Self {
        Witness::Integer(v)
    }
}

impl From<BigUint> for Witness {
    fn from(v: BigUint) -> Self {
        Witness::Integer(v.into())
    }
}

impl From<usize> for Witness {
    fn from(v: usize) -> Self {
        Witness::Integer(v.into())
    }
}

impl From<&str> for Witness {
    fn from(v: &str) -> Self {
        Witness::Text(v.to_string())
    }
}

/// One counterexample: named fields in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Failure {
    pub fields: Vec<(String, Witness)>,
}

impl Failure {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Witness>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Witness> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: String,
    pub parameters: BTreeMap<String, i64>,
    pub instances_checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Reported quantities that are observed but not asserted.
    pub observations: BTreeMap<String, String>,
    /// Filled in by callers that own a clock.
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(theorem: &str) -> Self {
        VerificationReport {
            theorem: theorem.to_string(),
            parameters: BTreeMap::new(),
            instances_checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            observations: BTreeMap::new(),
            wall_time_ms: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.parameters.insert(key.to_string(), value);
        self
    }

    /// Records one checked instance.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.instances_checked += 1;
        if !ok {
            self.push_failure(failure());
        }
    }

    pub fn push_failure(&mut self, failure: Failure) {
        self.failure_count += 1;
        if self.failures.len() < MAX_STORED_FAILURES {
            self.failures.push(failure);
        }
    }

    pub fn observe(&mut self, key: &str, value: impl ToString) {
        self.observations.insert(key.to_string(), value.to_string());
    }

    /// Folds in the counts and failures of a partial report over a disjoint
    /// slice of the same sweep.
    pub fn merge(&mut self, other: VerificationReport) {
        self.instances_checked += other.instances_checked;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_STORED_FAILURES {
                self.failures.push(f);
            }
        }
        self.observations.extend(other.observations);
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_is_associative_on_counts() {
        let mk = |n: u64, fails: u64| {
            let mut r = VerificationReport::new("t");
            for i in 0..n {
                r.check(i >= fails, || Failure::new().with("i", i as usize));
            }
            r
        };
        let (a, b, c) = (mk(3, 1), mk(4, 0), mk(2, 2));
        let mut left = a.clone();
        left.merge(b.clone());
        left.merge(c.clone());
        let mut bc = b;
        bc.merge(c);
        let mut right = a;
        right.merge(bc);
        assert_eq!(left, right);
        assert_eq!(left.instances_checked, 9);
        assert_eq!(left.failure_count, 3);
        assert_eq!(left.status(), "fail");
    }

    #[test]
    fn failures_are_capped_but_counted() {
        let mut r = VerificationReport::new("t");
        for _ in 0..(MAX_STORED_FAILURES + 10) {
            r.check(false, Failure::new);
        }
        assert_eq!(r.failures.len(), MAX_STORED_FAILURES);
        assert_eq!(r.failure_count as usize, MAX_STORED_FAILURES + 10);
    }
}
