use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// A failed check on one function, identified by its truth table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub n: usize,
    pub truth_table_hex: String,
    pub check: String,
}

/// Aggregated outcome of a verification run.
///
/// Reports merge associatively and commutatively, so workers can build
/// partial reports over disjoint inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub examined: u64,
    /// Functions per classification tag.
    pub counts: BTreeMap<String, u64>,
    /// Decompositions per shape, written `count x dim`.
    pub shapes: BTreeMap<String, u64>,
    /// Two-piece decompositions with `n = k`, outside the stated hypothesis
    /// `n > k`.
    pub outside_hypothesis: u64,
    pub violations: Vec<Violation>,
    /// Accumulated worker time per phase.
    pub timing_ms: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            ..Self::default()
        }
    }

    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.n = self.n.max(other.n);
        self.examined += other.examined;
        for (map, from) in [
            (&mut self.counts, other.counts),
            (&mut self.shapes, other.shapes),
            (&mut self.timing_ms, other.timing_ms),
        ] {
            for (key, v) in from {
                *map.entry(key).or_default() += v;
            }
        }
        self.outside_hypothesis += other.outside_hypothesis;
        self.violations.extend(other.violations);
        self.violations.sort();
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, tag: &str) -> u64 {
        self.counts.get(tag).copied().unwrap_or(0)
    }

    /// Same report with timing removed, for comparing runs.
    pub fn without_timing(mut self) -> Self {
        self.timing_ms.clear();
        self
    }

    pub(crate) fn bump(map: &mut BTreeMap<String, u64>, key: String) {
        *map.entry(key).or_default() += 1;
    }
}
