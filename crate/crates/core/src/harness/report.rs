use std::collections::BTreeMap;

use serde::Serialize;

use crate::structure::ClassificationSummary;

pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of one property over one group (or over the global partition
/// checks), aggregated over all the assertions it made.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub suite: String,
    pub anchor: String,
    pub assertions: usize,
    pub passed: bool,
    /// First failing instance, enough to rerun on a single group.
    pub witness: Option<String>,
}

/// A class with `|C(x)| = k(G)` whose elements are not root-of-unity
/// elements, and the table fact that reconciles it with the bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryNote {
    pub class: usize,
    pub representative: usize,
    pub element_order: usize,
    pub centralizer_order: usize,
    pub class_count: usize,
    /// Lowest-index character vanishing on the class, if any.
    pub vanishing_character: Option<usize>,
    /// `"vanishing"` when a character is zero there, which takes the class
    /// outside the nonvanishing hypothesis; `"violation"` otherwise.
    pub resolution: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupRecord {
    pub name: String,
    pub order: usize,
    pub class_count: usize,
    /// `k(G)/|G|` in lowest terms.
    pub commuting_probability: String,
    pub rue_elements: Vec<usize>,
    pub classification: Option<ClassificationSummary>,
    pub agreement: Option<bool>,
    /// Whether the predicted set equals the certified set; informational.
    pub predicted_equals_certified: Option<bool>,
    pub boundary: Vec<BoundaryNote>,
    pub checks: Vec<CheckOutcome>,
    /// Construction or table failure; counts as a failed check.
    pub error: Option<String>,
}

impl GroupRecord {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count() + usize::from(self.error.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub groups: usize,
    pub checks: usize,
    pub assertions: usize,
    pub failures: usize,
    pub disagreements: Vec<String>,
    /// Whether the predicted root-of-unity set equalled the certified set on
    /// every group with a positive structural verdict.
    pub predicted_equals_certified_everywhere: bool,
    pub predicted_differs_on: Vec<String>,
    pub wall_time_seconds: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    /// Suite name to the properties it asserts.
    pub manifest: BTreeMap<String, Vec<String>>,
    pub groups: Vec<GroupRecord>,
    /// Checks that do not depend on a catalog group.
    pub global: Vec<CheckOutcome>,
    pub summary: SuiteSummary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failures == 0
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = (&str, &CheckOutcome)> {
        self.groups
            .iter()
            .flat_map(|g| g.checks.iter().map(move |c| (g.name.as_str(), c)))
            .chain(self.global.iter().map(|c| ("global", c)))
            .filter(|(_, c)| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
