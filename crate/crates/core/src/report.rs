//! Machine-readable analysis reports.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{format_cells, CatalogEntry, Source};
use crate::classify::{
    classification_report, denominator_check, labels_report, property_checks, Analysis, ClassifyError, LabelOrientation,
};
use crate::exactla::Q;
use crate::parse::format_element;
use crate::render::GridRender;
use crate::rootsystem::{Element, LieAlgebra};
use crate::serial::{qvec, qvec_opt};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    /// Readable form in the element mini-language.
    pub text: String,
    #[serde(with = "qvec")]
    pub coords: Vec<Q>,
    /// Simple-root labels when the element lies in the standard Cartan.
    #[serde(with = "qvec_opt", default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Q>>,
}

impl ElementRecord {
    pub fn new(alg: &LieAlgebra, x: &Element) -> Self {
        ElementRecord {
            text: format_element(alg, x),
            coords: x.coords().to_vec(),
            labels: alg.labels_of(x.coords()).ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub wonderful: bool,
    pub integral: bool,
    pub even: bool,
    pub almost_even: bool,
    pub principal: bool,
    pub almost_principal: bool,
    pub rectangular: bool,
    pub trivial: bool,
    pub dim_z_e: usize,
    pub dim_z_h: usize,
    pub rank: usize,
    pub max_denominator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRecord {
    pub quantity: String,
    pub value: String,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationRecord {
    pub adapted_to: String,
    #[serde(with = "qvec")]
    pub h1: Vec<Q>,
    #[serde(with = "qvec")]
    pub h2: Vec<Q>,
    pub levi: String,
    pub labels_i: bool,
    pub labels_ii: bool,
    pub labels_iii: bool,
    pub coxeter_bound: i64,
    pub coxeter_bound_holds: bool,
    pub coxeter_bound_attained: bool,
    pub richardson: bool,
}

impl OrientationRecord {
    fn new(o: &LabelOrientation) -> Self {
        OrientationRecord {
            adapted_to: format!("h{}", o.dominant),
            h1: o.labels_h1.clone(),
            h2: o.labels_h2.clone(),
            levi: o.levi.type_label(),
            labels_i: o.labels_i,
            labels_ii: o.labels_ii,
            labels_iii: o.labels_iii,
            coxeter_bound: o.coxeter_bound,
            coxeter_bound_holds: o.coxeter_bound_holds,
            coxeter_bound_attained: o.coxeter_bound_attained,
            richardson: o.richardson,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entry: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub algebra: AlgebraDescriptor,
    pub e1: ElementRecord,
    pub e2: ElementRecord,
    pub h1: ElementRecord,
    pub h2: ElementRecord,
    pub flags: Flags,
    /// Eigenvalues of `h` on `z_g(e)`, one `(p,q)` per dimension.
    pub z_eigenvalues: String,
    pub grid: GridRender,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<OrientationRecord>,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<ExpectedRecord>,
}

impl ReportDocument {
    /// Runs the whole pipeline on an analysis.
    pub fn build(a: &Analysis, seed: u64) -> Self {
        let r = classification_report(a);
        let checks = property_checks(a, &r, seed)
            .into_iter()
            .map(|c| CheckRecord {
                name: c.name.to_string(),
                passed: c.passed,
                detail: c.detail,
            })
            .collect();
        let labels = labels_report(a, &r)
            .map(|l| {
                vec![
                    OrientationRecord::new(&l.adapted_to_h2),
                    OrientationRecord::new(&l.adapted_to_h1),
                ]
            })
            .unwrap_or_default();
        let max_denominator = denominator_check(a)
            .map(|d| d.max_denominator)
            .unwrap_or_else(|_| a.grading.max_denominator());
        ReportDocument {
            schema: SCHEMA_VERSION,
            entry: None,
            seed: None,
            algebra: AlgebraDescriptor {
                name: a.alg.name().to_string(),
                dim: a.alg.dim(),
                rank: a.alg.rank(),
            },
            e1: ElementRecord::new(a.alg, &a.pair.e1),
            e2: ElementRecord::new(a.alg, &a.pair.e2),
            h1: ElementRecord::new(a.alg, &a.ch.h1),
            h2: ElementRecord::new(a.alg, &a.ch.h2),
            flags: Flags {
                wonderful: r.wonderful,
                integral: r.integral,
                even: r.even,
                almost_even: r.almost_even,
                principal: r.principal,
                almost_principal: r.almost_principal,
                rectangular: r.rectangular,
                trivial: r.trivial,
                dim_z_e: r.dim_z_e,
                dim_z_h: r.dim_z_h,
                rank: r.rank,
                max_denominator: max_denominator.to_string(),
            },
            z_eigenvalues: format_cells(&a.z_e.eigenvalues()),
            grid: GridRender::from_grading(&a.grading, Some(&a.z_e)),
            labels,
            checks,
            violations: r.violations,
            expected: Vec::new(),
        }
    }

    pub fn for_entry(entry: &CatalogEntry, seed: u64) -> Result<Self, ReportError> {
        let a = entry.analysis()?;
        let mut doc = ReportDocument::build(&a, seed);
        doc.entry = Some(entry.id.clone());
        doc.seed = entry.seed;
        doc.expected = entry
            .expected
            .iter()
            .map(|e| ExpectedRecord {
                quantity: e.quantity.to_string(),
                value: e.value.clone(),
                source: e.source,
            })
            .collect();
        Ok(doc)
    }

    /// All checks passed and the flags are mutually consistent.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let f = &self.flags;
        let mut out = String::new();
        if let Some(id) = &self.entry {
            out.push_str(&format!("entry      {id}\n"));
        }
        out.push_str(&format!(
            "algebra    {} (dim {}, rank {})\n",
            self.algebra.name, self.algebra.dim, self.algebra.rank
        ));
        for (name, x) in [("e1", &self.e1), ("e2", &self.e2), ("h1", &self.h1), ("h2", &self.h2)] {
            out.push_str(&format!("{name:<10} {}\n", x.text));
            if let Some(l) = &x.labels {
                if name.starts_with('h') {
                    let l: Vec<String> = l.iter().map(ToString::to_string).collect();
                    out.push_str(&format!("{:<10} ({})\n", format!("{name} labels"), l.join(",")));
                }
            }
        }
        out.push_str(&format!(
            "dim z(e) = {}, dim z(h) = {}, rank = {}, max denominator = {}\n",
            f.dim_z_e, f.dim_z_h, f.rank, f.max_denominator
        ));
        out.push_str(&format!("z(e) eigenvalues: {}\n", self.z_eigenvalues));
        let flags = [
            ("wonderful", f.wonderful),
            ("integral", f.integral),
            ("even", f.even),
            ("almost_even", f.almost_even),
            ("principal", f.principal),
            ("almost_principal", f.almost_principal),
            ("rectangular", f.rectangular),
            ("trivial", f.trivial),
        ];
        let flags: Vec<String> = flags.iter().map(|(n, v)| format!("{n}={v}")).collect();
        out.push_str(&flags.join(" "));
        out.push('\n');
        for l in &self.labels {
            let h1: Vec<String> = l.h1.iter().map(ToString::to_string).collect();
            let h2: Vec<String> = l.h2.iter().map(ToString::to_string).collect();
            out.push_str(&format!(
                "labels adapted to {}: h1=({}) h2=({}) levi {} bound {} holds={} attained={} richardson={}\n",
                l.adapted_to,
                h1.join(","),
                h2.join(","),
                l.levi,
                l.coxeter_bound,
                l.coxeter_bound_holds,
                l.coxeter_bound_attained,
                l.richardson
            ));
        }
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("  {mark} {}\n", c.name));
            } else {
                out.push_str(&format!("  {mark} {} ({})\n", c.name, c.detail));
            }
        }
        for v in &self.violations {
            out.push_str(&format!("  violation: {v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn json_round_trip_on_sp6() {
        let e = catalog::sp6_example().unwrap();
        let doc = ReportDocument::for_entry(&e, 1).unwrap();
        assert!(doc.passed(), "{}", doc.to_text());
        assert_eq!(doc.flags.max_denominator, "3");
        let json = doc.to_json();
        assert!(json.contains("\"1/3\""));
        assert_eq!(ReportDocument::from_json(&json).unwrap(), doc);
    }
}
