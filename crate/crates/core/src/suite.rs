//! The property battery over the whole catalog, plus golden grid comparisons.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::catalog::{self, CatalogEntry};
use crate::render::GridRender;
use crate::report::ReportDocument;

/// Golden grids shipped with the crate: `(file, catalog entry)`.
pub const FIGURES: [(&str, &str); 2] = [("figure1.txt", "e6-d5-2a1"), ("figure2.txt", "e7-a4a1")];

pub fn default_golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// A property name, `figures`, or a catalog id prefix.
    pub filter: Option<String>,
    pub seed: u64,
    pub golden_dir: PathBuf,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            filter: None,
            seed: catalog::DEFAULT_SEED,
            golden_dir: default_golden_dir(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteSummary {
    pub entries: Vec<String>,
    pub tallies: BTreeMap<String, Tally>,
    /// Entries that could not be built or analyzed.
    pub errors: Vec<String>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.tallies.values().all(|t| t.failed.is_empty())
    }

    fn record(&mut self, name: &str, who: &str, ok: bool, detail: &str) {
        let t = self.tallies.entry(name.to_string()).or_default();
        if ok {
            t.passed += 1;
        } else if detail.is_empty() {
            t.failed.push(who.to_string());
        } else {
            t.failed.push(format!("{who}: {detail}"));
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.tallies.keys().map(String::len).max().unwrap_or(0);
        for (name, t) in &self.tallies {
            let status = if t.failed.is_empty() { "ok  " } else { "FAIL" };
            out.push_str(&format!(
                "{status} {name:<width$}  {} passed, {} failed\n",
                t.passed,
                t.failed.len()
            ));
            for f in &t.failed {
                out.push_str(&format!("       {f}\n"));
            }
        }
        for e in &self.errors {
            out.push_str(&format!("ERROR {e}\n"));
        }
        out.push_str(&format!(
            "{} entries, {} properties: {}\n",
            self.entries.len(),
            self.tallies.len(),
            if self.passed() { "all passed" } else { "FAILED" }
        ));
        out
    }
}

/// Compares the computed grid of a catalog entry with a golden file.
pub fn compare_golden(entry: &CatalogEntry, path: &Path) -> Result<(), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let golden = GridRender::parse_ascii(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let a = entry.analysis().map_err(|e| e.to_string())?;
    let computed = GridRender::from_grading(&a.grading, Some(&a.z_e));
    if golden == computed {
        return Ok(());
    }
    let mut diffs = Vec::new();
    let mut keys: Vec<_> = golden
        .cells
        .iter()
        .chain(&computed.cells)
        .map(|c| (c.p.clone(), c.q.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    for (p, q) in keys {
        let g = golden.get(&p, &q).map(|c| (c.dim, c.star));
        let c = computed.get(&p, &q).map(|c| (c.dim, c.star));
        if g != c {
            diffs.push(format!("({p},{q}): golden {g:?}, computed {c:?}"));
        }
    }
    Err(format!("{} differs: {}", path.display(), diffs.join("; ")))
}

fn matches(filter: &Option<String>, name: &str) -> bool {
    filter.as_deref().is_none_or(|f| f == name)
}

pub fn run(opts: &SuiteOptions) -> SuiteSummary {
    let mut summary = SuiteSummary::default();
    let filter = &opts.filter;
    let entry_filter = filter
        .as_deref()
        .filter(|f| catalog::catalog_ids().iter().any(|id| id.starts_with(f)));
    let property_filter = if entry_filter.is_some() { &None } else { filter };

    let figures_only = filter.as_deref() == Some("figures");
    let ids: Vec<String> = catalog::catalog_ids()
        .into_iter()
        .filter(|id| entry_filter.is_none_or(|f| id.starts_with(f)))
        .filter(|id| !figures_only || FIGURES.iter().any(|(_, e)| e == id))
        .collect();

    let built: Vec<(String, Result<(CatalogEntry, Option<ReportDocument>), String>)> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| {
                s.spawn(move || {
                    let entry = catalog::entry(id, opts.seed).map_err(|e| e.to_string())?;
                    if figures_only {
                        return Ok((entry, None));
                    }
                    let doc = ReportDocument::for_entry(&entry, opts.seed).map_err(|e| e.to_string())?;
                    Ok((entry, Some(doc)))
                })
            })
            .collect();
        ids.iter()
            .cloned()
            .zip(
                handles
                    .into_iter()
                    .map(|h| h.join().unwrap_or_else(|_| Err("panicked".into()))),
            )
            .collect()
    });

    for (id, result) in built {
        summary.entries.push(id.clone());
        let (entry, doc) = match result {
            Ok(x) => x,
            Err(e) => {
                summary.errors.push(format!("{id}: {e}"));
                continue;
            }
        };
        if let Some(doc) = &doc {
            for c in &doc.checks {
                if matches(property_filter, &c.name) {
                    summary.record(&c.name, &id, c.passed, &c.detail);
                }
            }
            if matches(property_filter, "report-consistency") {
                summary.record(
                    "report-consistency",
                    &id,
                    doc.violations.is_empty(),
                    &doc.violations.join("; "),
                );
            }
        }
        if matches(property_filter, "figures") || entry_filter.is_some() {
            if let Some((file, _)) = FIGURES.iter().find(|(_, e)| *e == id) {
                let r = compare_golden(&entry, &opts.golden_dir.join(file));
                summary.record("figures", &id, r.is_ok(), r.err().as_deref().unwrap_or(""));
            }
        }
    }
    summary
}
