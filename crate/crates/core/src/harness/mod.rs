//! Group catalog and the verification suites run over it.

mod catalog;
mod checks;
mod report;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

pub use catalog::{build_catalog, parse_group_spec, CatalogEntry, Construction};
pub use checks::{gamma_multisets, recognition_oracle};
pub use report::{
    BoundaryNote, CheckOutcome, GroupRecord, SuiteSummary, VerificationReport, SCHEMA_VERSION,
};

use crate::error::{Error, Result};
use crate::grp::enumeration_bound;
use crate::structure::Verdict;
use checks::GroupContext;

/// Suite names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "orthogonality",
    "lemma21",
    "lemma22",
    "lemma23",
    "theoremA",
    "lemma32",
    "lemma33",
    "lemma41",
    "prop42",
    "cor43",
    "theoremB",
];

fn anchors(suite: &str) -> &'static [&'static str] {
    match suite {
        "orthogonality" => checks::ORTHOGONALITY,
        "lemma21" => checks::LEMMA21,
        "lemma22" => checks::LEMMA22,
        "lemma23" => checks::LEMMA23,
        "theoremA" => checks::THEOREM_A,
        "lemma32" => checks::LEMMA32,
        "lemma33" => checks::LEMMA33,
        "lemma41" => checks::LEMMA41,
        "prop42" => checks::PROP42,
        "cor43" => checks::COR43,
        "theoremB" => checks::THEOREM_B,
        _ => &[],
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Enumeration bound for building catalog groups.
    pub bound: usize,
    /// Record wall time in the summary. Off by default so reports are
    /// byte-identical across runs.
    pub timings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            bound: enumeration_bound(),
            timings: false,
        }
    }
}

pub fn run_suite(suite: &str, catalog: &[CatalogEntry]) -> Result<VerificationReport> {
    run_suite_with(suite, catalog, &SuiteOptions::default())
}

pub fn run_suite_with(
    suite: &str,
    catalog: &[CatalogEntry],
    options: &SuiteOptions,
) -> Result<VerificationReport> {
    let selected: Vec<&'static str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![*SUITES
            .iter()
            .find(|&&s| s == suite)
            .ok_or_else(|| Error::UnknownSuite(suite.to_string()))?]
    };
    let start = Instant::now();
    let per_group = selected.iter().any(|&s| s != "lemma33");
    let groups: Vec<GroupRecord> = if per_group {
        catalog
            .par_iter()
            .map(|entry| verify_group(entry, &selected, options.bound))
            .collect()
    } else {
        Vec::new()
    };
    let global = if selected.contains(&"lemma33") {
        checks::lemma33_global().unwrap_or_else(|e| {
            vec![CheckOutcome {
                suite: "lemma33".into(),
                anchor: checks::LEMMA33[0].into(),
                assertions: 0,
                passed: false,
                witness: Some(e.to_string()),
            }]
        })
    } else {
        Vec::new()
    };

    let manifest: BTreeMap<String, Vec<String>> = selected
        .iter()
        .map(|&s| (s.to_string(), anchors(s).iter().map(|a| a.to_string()).collect()))
        .collect();
    let all_checks = groups.iter().flat_map(|g| &g.checks).chain(&global);
    let (checks_run, assertions) = all_checks.fold((0, 0), |(c, a), o| (c + 1, a + o.assertions));
    let failures = groups.iter().map(GroupRecord::failures).sum::<usize>()
        + global.iter().filter(|c| !c.passed).count();
    let disagreements = groups
        .iter()
        .filter(|g| g.agreement == Some(false))
        .map(|g| g.name.clone())
        .collect();
    let predicted_differs_on: Vec<String> = groups
        .iter()
        .filter(|g| g.predicted_equals_certified == Some(false))
        .map(|g| g.name.clone())
        .collect();
    let summary = SuiteSummary {
        groups: groups.len(),
        checks: checks_run,
        assertions,
        failures,
        disagreements,
        predicted_equals_certified_everywhere: predicted_differs_on.is_empty(),
        predicted_differs_on,
        wall_time_seconds: options.timings.then(|| start.elapsed().as_secs_f64()),
    };
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        suite: suite.to_string(),
        manifest,
        groups,
        global,
        summary,
    })
}

fn empty_record(entry: &CatalogEntry, error: Error) -> GroupRecord {
    GroupRecord {
        name: entry.name.clone(),
        order: 0,
        class_count: 0,
        commuting_probability: String::new(),
        rue_elements: Vec::new(),
        classification: None,
        agreement: None,
        predicted_equals_certified: None,
        boundary: Vec::new(),
        checks: Vec::new(),
        error: Some(error.to_string()),
    }
}

fn verify_group(entry: &CatalogEntry, suites: &[&str], bound: usize) -> GroupRecord {
    let cx = match entry
        .construction
        .build(bound)
        .and_then(|g| GroupContext::new(entry.name.clone(), g))
    {
        Ok(cx) => cx,
        Err(e) => return empty_record(entry, e),
    };
    let summary = cx.classification.summary();
    let predicted_equals_certified =
        (summary.verdict != Verdict::NoRueElement).then(|| summary.predicted == cx.rue_elements);
    let mut record = GroupRecord {
        name: cx.name.clone(),
        order: cx.g.order(),
        class_count: cx.table.k_of_group(),
        commuting_probability: cx.table.commuting_probability().to_string(),
        rue_elements: cx.rue_elements.clone(),
        classification: Some(summary),
        agreement: Some(cx.agreement()),
        predicted_equals_certified,
        boundary: cx.boundary_notes(),
        checks: Vec::new(),
        error: None,
    };
    for &suite in suites {
        let outcome = match suite {
            "orthogonality" => Ok(checks::orthogonality(&cx)),
            "lemma21" => Ok(checks::lemma21(&cx)),
            "lemma22" => checks::lemma22(&cx),
            "lemma23" => Ok(checks::lemma23(&cx)),
            "theoremA" => checks::theorem_a(&cx),
            "lemma32" => checks::lemma32(&cx),
            "lemma41" => checks::lemma41(&cx),
            "prop42" => Ok(checks::prop42(&cx)),
            "cor43" => Ok(checks::cor43(&cx)),
            "theoremB" => checks::theorem_b(&cx),
            _ => Ok(Vec::new()),
        };
        match outcome {
            Ok(c) => record.checks.extend(c),
            Err(e) => {
                record.error = Some(format!("{} suite: {}", suite, e));
                break;
            }
        }
    }
    record
}
