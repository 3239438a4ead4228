//! Shared fixtures for the pipeline benchmarks.

use nilpairs::catalog::{self, CatalogEntry, DEFAULT_SEED};
use nilpairs::classify::{classification_report, property_checks};
use nilpairs::report::ReportDocument;

/// Catalog entries benchmarked end to end, smallest first.
pub const ENTRIES: [&str; 4] = ["sl4-partition-2-1-1", "sp6-denom", "sp4n-n2", "e6-d5-2a1"];

pub fn entry(id: &str) -> CatalogEntry {
    catalog::entry(id, DEFAULT_SEED).unwrap_or_else(|e| panic!("{id}: {e}"))
}

/// Characteristic, grading and classification, without the battery.
pub fn classify(e: &CatalogEntry) -> bool {
    let a = e.analysis().expect("analysis");
    classification_report(&a).wonderful
}

/// Number of failing checks in the full battery.
pub fn battery(e: &CatalogEntry) -> usize {
    let a = e.analysis().expect("analysis");
    let r = classification_report(&a);
    property_checks(&a, &r, DEFAULT_SEED)
        .iter()
        .filter(|c| !c.passed)
        .count()
}

pub fn report_json(e: &CatalogEntry) -> String {
    ReportDocument::for_entry(e, DEFAULT_SEED).expect("report").to_json()
}
