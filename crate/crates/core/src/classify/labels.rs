//! Numerical labels of a characteristic relative to an adapted set of simple
//! roots, the exponents theorem and the denominator bound.

use std::collections::BTreeSet;

use num::{BigInt, Integer, One, Signed, Zero};

use super::{richardson_check, Analysis, ClassificationReport, ClassifyError};
use crate::exactla::Q;
use crate::grading::LimitMode;
use crate::rootsystem::{levi_data, min_bound_d, subsystem_data, LeviData, RootSystem};

/// Applies simple reflections until `first + ε·second` is dominant for small
/// `ε > 0`: every label pair `(first_i, second_i)` is lexicographically `≥ 0`.
pub fn adapt_labels(rs: &RootSystem, first: &[Q], second: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let cartan = rs.cartan();
    let mut a = first.to_vec();
    let mut b = second.to_vec();
    let negative = |x: &Q, y: &Q| x.is_negative() || (x.is_zero() && y.is_negative());
    while let Some(i) = (0..a.len()).find(|&i| negative(&a[i], &b[i])) {
        let (ai, bi) = (a[i].clone(), b[i].clone());
        for j in 0..a.len() {
            let c = Q::from_integer(cartan[i][j].into());
            a[j] -= &ai * &c;
            b[j] -= &bi * &c;
        }
    }
    (a, b)
}

/// Labels adapted to `h_dominant` (with ties broken by the other element) and
/// the label-theorem verdicts for that orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelOrientation {
    /// 2 when adapted to `h2` (the theorems' orientation), 1 when mirrored.
    pub dominant: usize,
    pub labels_h1: Vec<Q>,
    pub labels_h2: Vec<Q>,
    /// Simple roots vanishing on the dominant element.
    pub levi_subset: Vec<usize>,
    pub levi: LeviData,
    /// Labels of the dominant element lie in `{0, 1}`.
    pub labels_i: bool,
    /// Where the dominant label is 0, the other lies in `{0, 1}`.
    pub labels_ii: bool,
    /// `min 2(μ|ν)` over simple roots outside the Levi subset.
    pub d_bound: Option<Q>,
    /// Where the dominant label is 1, the other lies in `{d, ..., 0}`.
    pub labels_iii: bool,
    /// Where the dominant label is 0, the other equals 1.
    pub prchar_ii: bool,
    /// `-cox(levi) + 1`.
    pub coxeter_bound: i64,
    /// Where the dominant label is 1, the other lies in `{coxeter_bound, ..., 0}`.
    pub coxeter_bound_holds: bool,
    pub coxeter_bound_attained: bool,
    /// Whether `G·e` is Richardson for the `e` paired with the dominant `h`.
    pub richardson: bool,
    /// The Coxeter-bound clause, applicable only when `richardson` holds.
    pub prchar_iii: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelReport {
    pub standard_h1: Vec<Q>,
    pub standard_h2: Vec<Q>,
    pub adapted_to_h2: LabelOrientation,
    pub adapted_to_h1: LabelOrientation,
    /// Principal or almost principal, so the sharper clauses apply.
    pub prchar_applicable: bool,
}

fn in_range(x: &Q, lo: &Q, hi: &Q) -> bool {
    x.is_integer() && x >= lo && x <= hi
}

fn orientation(a: &Analysis, dominant: usize, std_h1: &[Q], std_h2: &[Q]) -> Result<LabelOrientation, ClassifyError> {
    let rs = a.alg.root_system();
    let (dom, other) = if dominant == 2 {
        (std_h2, std_h1)
    } else {
        (std_h1, std_h2)
    };
    let (dom, other) = adapt_labels(rs, dom, other);
    let levi_subset: Vec<usize> = (0..dom.len()).filter(|&i| dom[i].is_zero()).collect();
    let levi = levi_data(rs, &levi_subset)?;
    let d_bound = min_bound_d(rs, &levi_subset)?;
    let zero = Q::zero();
    let one = Q::one();
    let labels_i = dom.iter().all(|x| x.is_zero() || x.is_one());
    let on_zero: Vec<&Q> = (0..dom.len())
        .filter(|&i| dom[i].is_zero())
        .map(|i| &other[i])
        .collect();
    let on_one: Vec<&Q> = (0..dom.len()).filter(|&i| dom[i].is_one()).map(|i| &other[i]).collect();
    let labels_ii = on_zero.iter().all(|x| x.is_zero() || x.is_one());
    let labels_iii = match &d_bound {
        Some(d) => on_one.iter().all(|x| in_range(x, d, &zero)),
        None => on_one.is_empty(),
    };
    let prchar_ii = on_zero.iter().all(|x| **x == one);
    let coxeter_bound = 1 - i64::from(levi.coxeter_max);
    let cb = Q::from_integer(coxeter_bound.into());
    let coxeter_bound_holds = on_one.iter().all(|x| in_range(x, &cb, &zero));
    let coxeter_bound_attained = on_one.iter().any(|x| **x == cb);
    let richardson = richardson_check(a, dominant).ambient;
    let (labels_h1, labels_h2) = if dominant == 2 { (other, dom) } else { (dom, other) };
    Ok(LabelOrientation {
        dominant,
        labels_h1,
        labels_h2,
        levi_subset,
        levi,
        labels_i,
        labels_ii,
        d_bound,
        labels_iii,
        prchar_ii,
        coxeter_bound,
        coxeter_bound_holds,
        coxeter_bound_attained,
        richardson,
        prchar_iii: richardson.then_some(coxeter_bound_holds),
    })
}

/// Requires `h1, h2` in the standard Cartan subalgebra and an integral pair.
pub fn labels_report(a: &Analysis, report: &ClassificationReport) -> Result<LabelReport, ClassifyError> {
    if !a.is_integral() {
        return Err(ClassifyError::Precondition("pair is not integral".into()));
    }
    let h1 = a.alg.labels_of(&a.ch.h1).map_err(|_| ClassifyError::NotInCartan)?;
    let h2 = a.alg.labels_of(&a.ch.h2).map_err(|_| ClassifyError::NotInCartan)?;
    Ok(LabelReport {
        adapted_to_h2: orientation(a, 2, &h1, &h2)?,
        adapted_to_h1: orientation(a, 1, &h1, &h2)?,
        standard_h1: h1,
        standard_h2: h2,
        prchar_applicable: report.principal || report.almost_principal,
    })
}

/// Positive roots `β` with `β(h)` satisfying `keep`.
fn roots_where(rs: &RootSystem, labels: &[&[Q]], keep: impl Fn(&[Q]) -> bool) -> Vec<Vec<i64>> {
    rs.positive_roots()
        .iter()
        .filter(|beta| {
            let values: Vec<Q> = labels
                .iter()
                .map(|l| {
                    beta.iter()
                        .zip(l.iter())
                        .map(|(b, x)| Q::from_integer((*b).into()) * x)
                        .sum()
                })
                .collect();
            keep(&values)
        })
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentsCheck {
    /// Eigenvalues `(α_i, β_i)` of `h` on `lim_e 𝔥`.
    pub eigenvalues: Vec<(Q, Q)>,
    /// Nonzero `α_i`, sorted.
    pub alphas: Vec<Q>,
    pub exponents_l2: Vec<u32>,
    pub levi_l2: String,
    /// Nonzero `β_i`, sorted.
    pub betas: Vec<Q>,
    pub exponents_l1: Vec<u32>,
    pub levi_l1: String,
}

impl ExponentsCheck {
    fn matches(values: &[Q], exps: &[u32]) -> bool {
        let mut e: Vec<Q> = exps.iter().map(|&x| Q::from_integer(x.into())).collect();
        e.sort();
        values == e.as_slice()
    }

    pub fn l2_matches(&self) -> bool {
        Self::matches(&self.alphas, &self.exponents_l2)
    }

    pub fn l1_matches(&self) -> bool {
        Self::matches(&self.betas, &self.exponents_l1)
    }

    pub fn passed(&self) -> bool {
        self.l2_matches() && self.l1_matches()
    }
}

/// Nonzero first coordinates of the `h`-spectrum on `lim_e 𝔥` against the
/// exponents of `𝔩2 = z(h2)`, and symmetrically for `𝔩1`.
pub fn exponents_check(a: &Analysis, report: &ClassificationReport) -> Result<ExponentsCheck, ClassifyError> {
    if !(report.principal || report.almost_principal) {
        return Err(ClassifyError::Precondition(
            "pair is neither principal nor almost principal".into(),
        ));
    }
    let lim = a.grading.graded(&a.lim_h(LimitMode::Both))?;
    let eigenvalues: Vec<(Q, Q)> = lim.eigenvalues().into_iter().map(|c| (c.p, c.q)).collect();
    let mut alphas: Vec<Q> = eigenvalues
        .iter()
        .map(|(p, _)| p.clone())
        .filter(|p| !p.is_zero())
        .collect();
    let mut betas: Vec<Q> = eigenvalues
        .iter()
        .map(|(_, q)| q.clone())
        .filter(|q| !q.is_zero())
        .collect();
    alphas.sort();
    betas.sort();
    let h1 = a.alg.labels_of(&a.ch.h1).map_err(|_| ClassifyError::NotInCartan)?;
    let h2 = a.alg.labels_of(&a.ch.h2).map_err(|_| ClassifyError::NotInCartan)?;
    let rs = a.alg.root_system();
    let l2 = subsystem_data(rs, &roots_where(rs, &[&h2], |v| v[0].is_zero()));
    let l1 = subsystem_data(rs, &roots_where(rs, &[&h1], |v| v[0].is_zero()));
    let sorted = |mut v: Vec<u32>| {
        v.sort();
        v
    };
    Ok(ExponentsCheck {
        eigenvalues,
        alphas,
        exponents_l2: sorted(l2.exponents.clone()),
        levi_l2: l2.type_label(),
        betas,
        exponents_l1: sorted(l1.exponents.clone()),
        levi_l1: l1.type_label(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorCheck {
    pub max_denominator: BigInt,
    /// Type of `s = [g_ZZ, g_ZZ]`.
    pub s_type: String,
    pub c_s: i64,
    pub divides: bool,
}

/// Every eigenvalue denominator of `ad h1`, `ad h2` divides `c(s)`.
pub fn denominator_check(a: &Analysis) -> Result<DenominatorCheck, ClassifyError> {
    let h1 = a.alg.labels_of(&a.ch.h1).map_err(|_| ClassifyError::NotInCartan)?;
    let h2 = a.alg.labels_of(&a.ch.h2).map_err(|_| ClassifyError::NotInCartan)?;
    let rs = a.alg.root_system();
    let s = subsystem_data(rs, &roots_where(rs, &[&h1, &h2], |v| v.iter().all(|x| x.is_integer())));
    let c = BigInt::from(s.cartan_det);
    let dens: BTreeSet<BigInt> = a
        .grading
        .support()
        .into_iter()
        .flat_map(|cell| [cell.p.denom().clone(), cell.q.denom().clone()])
        .collect();
    Ok(DenominatorCheck {
        max_denominator: dens.iter().max().cloned().unwrap_or_else(BigInt::one),
        s_type: s.type_label(),
        c_s: s.cartan_det,
        divides: dens.iter().all(|d| c.is_multiple_of(d)),
    })
}
