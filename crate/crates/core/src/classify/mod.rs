//! Classification predicates and theorem checkers for a nilpotent pair with a
//! characteristic.

mod checks;
mod labels;

pub use checks::{property_checks, CheckOutcome};
pub use labels::{
    adapt_labels, denominator_check, exponents_check, labels_report, DenominatorCheck, ExponentsCheck,
    LabelOrientation, LabelReport,
};

use num::{Signed, Zero};
use thiserror::Error;

use crate::exactla::{joint_eigenspaces, ExactError, QMatrix, Subspace, Q};
use crate::grading::{AxisFilter, BiGrading, Cell, Descriptor, Filtration, GradedSlice, GradingError, LimitMode};
use crate::pairs::{centralizer, rectangularity, Characteristic, NilpotentPair, PairError, Rectangularity};
use crate::rootsystem::{LieAlgebra, RootError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("characteristic is not in the standard Cartan subalgebra")]
    NotInCartan,
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Everything derived once from `(g, e, h)` and shared by the predicates.
#[derive(Clone, Debug)]
pub struct Analysis<'a> {
    pub alg: &'a LieAlgebra,
    pub pair: NilpotentPair,
    pub ch: Characteristic,
    pub grading: BiGrading,
    pub filtration: Filtration,
    /// `z_g(e)` split into cells.
    pub z_e: GradedSlice,
    /// `𝔥 = z_g(h) = g_{0,0}`.
    pub hh: Subspace,
}

impl<'a> Analysis<'a> {
    pub fn new(alg: &'a LieAlgebra, pair: NilpotentPair, ch: Characteristic) -> Result<Self, ClassifyError> {
        let grading = BiGrading::new(alg, &ch.h1, &ch.h2)?;
        let filtration = Filtration::new(alg, &pair);
        let z_e = grading.graded(&centralizer(alg, &[&pair.e1, &pair.e2]))?;
        let hh = grading.zero_cell();
        Ok(Analysis {
            alg,
            pair,
            ch,
            grading,
            filtration,
            z_e,
            hh,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn limit(&self, m: &Subspace, mode: LimitMode) -> Subspace {
        self.filtration.limit(m, mode)
    }

    pub fn lim_h(&self, mode: LimitMode) -> Subspace {
        self.limit(&self.hh, mode)
    }

    /// `z_g(S)` for `S` a subset of `{e1, e2, h1, h2}`, as a graded slice.
    pub fn z_of(&self, e1: bool, e2: bool, h1: bool, h2: bool) -> GradedSlice {
        let mut els: Vec<&[Q]> = Vec::new();
        if e1 {
            els.push(&self.pair.e1);
        }
        if e2 {
            els.push(&self.pair.e2);
        }
        if h1 {
            els.push(&self.ch.h1);
        }
        if h2 {
            els.push(&self.ch.h2);
        }
        self.grading
            .graded(&centralizer(self.alg, &els))
            .expect("centralizers of e and h are graded")
    }

    /// `[M, e_i]`, i.e. the image of `M` under `ad e_i`.
    pub fn bracket_with(&self, m: &Subspace, i: usize) -> Subspace {
        m.image_under(&self.filtration.power(i, 1))
    }

    pub fn is_integral(&self) -> bool {
        self.grading.is_integral()
    }
}

/// One `(i, j)` entry of the wonderful certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WonderEntry {
    pub i: usize,
    pub j: usize,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WonderfulCertificate {
    pub entries: Vec<WonderEntry>,
    pub wonderful: bool,
}

impl WonderfulCertificate {
    pub fn failures(&self) -> impl Iterator<Item = &WonderEntry> {
        self.entries.iter().filter(|e| !e.equal)
    }
}

/// `(ad e1)^i (ad e2)^j 𝔥(i,j) = z_g(e)_{i,j}` for all `i, j ∈ ℙ`.
pub fn is_wonderful(a: &Analysis) -> WonderfulCertificate {
    let max_of = |f: fn(&Cell) -> &Q| -> usize {
        a.z_e
            .cells
            .keys()
            .filter(|c| c.is_integral())
            .map(|c| f(c).to_integer())
            .filter(|v| !v.is_negative())
            .max()
            .map_or(0, |v| v.try_into().unwrap_or(0))
    };
    let imax = max_of(|c| &c.p).max(a.filtration.index(1) - 1);
    let jmax = max_of(|c| &c.q).max(a.filtration.index(2) - 1);
    let mut entries = Vec::new();
    for j in 0..=jmax {
        for i in 0..=imax {
            let lhs = a.filtration.graded_piece(&a.hh, i, j);
            let zero = Subspace::zero(a.dim());
            let rhs = a.z_e.cell(&Cell::int(i as i64, j as i64)).unwrap_or(&zero);
            if lhs.is_zero() && rhs.is_zero() {
                continue;
            }
            entries.push(WonderEntry {
                i,
                j,
                lhs_dim: lhs.dim(),
                rhs_dim: rhs.dim(),
                equal: &lhs == rhs,
            });
        }
    }
    let wonderful = entries.iter().all(|e| e.equal);
    WonderfulCertificate { entries, wonderful }
}

/// Integrality from the spectrum, and from the centralizer slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegralityCheck {
    pub integral: bool,
    pub centralizer_integral: bool,
}

impl IntegralityCheck {
    pub fn agrees(&self) -> bool {
        self.integral == self.centralizer_integral
    }
}

pub fn is_integral(a: &Analysis) -> IntegralityCheck {
    IntegralityCheck {
        integral: a.grading.is_integral(),
        centralizer_integral: a.z_e.cells.keys().all(Cell::is_integral),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
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
    pub rectangularity: Rectangularity,
    pub integrality: IntegralityCheck,
    pub certificate: WonderfulCertificate,
    /// Violated implications between the flags; empty when consistent.
    pub violations: Vec<String>,
}

pub fn classification_report(a: &Analysis) -> ClassificationReport {
    let dim_z_e = a.z_e.dim();
    let dim_z_h = a.hh.dim();
    let rank = a.alg.rank();
    let certificate = is_wonderful(a);
    let integrality = is_integral(a);
    let rectangularity = rectangularity(a.alg, &a.pair, &a.ch);
    let mut r = ClassificationReport {
        wonderful: certificate.wonderful,
        integral: integrality.integral,
        even: dim_z_e == dim_z_h,
        almost_even: dim_z_e == dim_z_h + 1,
        principal: dim_z_e == rank,
        almost_principal: dim_z_e == rank + 1,
        rectangular: rectangularity.h1_in_image_e1,
        trivial: a.pair.is_trivial(),
        dim_z_e,
        dim_z_h,
        rank,
        rectangularity,
        integrality,
        certificate,
        violations: Vec::new(),
    };
    let mut v = Vec::new();
    if r.principal && !r.even {
        v.push("principal but not even".to_string());
    }
    if r.almost_principal && !r.almost_even {
        v.push("almost principal but not almost even".to_string());
    }
    if r.even && !(r.wonderful && r.integral) {
        v.push("even but not wonderful and integral".to_string());
    }
    if r.rectangular && !r.wonderful {
        v.push("rectangular but not wonderful".to_string());
    }
    if r.almost_even && !r.wonderful {
        v.push("almost even but not wonderful".to_string());
    }
    if !r.integrality.agrees() {
        v.push("integrality disagrees with the centralizer slice".to_string());
    }
    if r.rectangularity.h1_in_image_e1 != r.rectangularity.h2_in_image_e2 {
        v.push("rectangularity clauses disagree".to_string());
    }
    if dim_z_h > dim_z_e || dim_z_h < rank {
        v.push("rk g <= dim z(h) <= dim z(e) fails".to_string());
    }
    r.violations = v;
    r
}

/// Both sides of the characterization of wonderful integral pairs.
pub fn xarak_check(a: &Analysis) -> Result<(bool, bool), ClassifyError> {
    if !a.is_integral() {
        return Err(ClassifyError::Precondition("pair is not integral".into()));
    }
    let lhs = a.lim_h(LimitMode::Both) == a.z_e.restrict(Descriptor::naturals()).space;
    let third = a
        .z_e
        .restrict(Descriptor::new(AxisFilter::Negative, AxisFilter::Negative))
        .dim()
        == 0;
    let z1 = a.z_of(true, false, false, false);
    let axis1 = z1
        .restrict(Descriptor::new(AxisFilter::Negative, AxisFilter::Exactly(Q::zero())))
        .dim()
        == 0;
    let z2 = a.z_of(false, true, false, false);
    let axis2 = z2
        .restrict(Descriptor::new(AxisFilter::Exactly(Q::zero()), AxisFilter::Negative))
        .dim()
        == 0;
    Ok((lhs, third && axis1 && axis2))
}

/// `z_g(e)_{p,q} = 0` for `p, q < 0`.
pub fn pusto3_check(a: &Analysis, report: &ClassificationReport) -> Result<bool, ClassifyError> {
    if !(report.wonderful && report.integral) {
        return Err(ClassifyError::Precondition("pair is not wonderful and integral".into()));
    }
    Ok(a.z_e
        .restrict(Descriptor::new(AxisFilter::Negative, AxisFilter::Negative))
        .space
        .is_zero())
}

/// Richardson tests for `e_side`: in `g` (parabolic `g_{*,≥0}` for side 2)
/// and in the Levi subalgebra (`e1` in `𝔩2 = g_{*,0}` for side 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RichardsonCheck {
    pub ambient: bool,
    pub levi: bool,
}

pub fn richardson_check(a: &Analysis, side: usize) -> RichardsonCheck {
    let zero = || AxisFilter::Exactly(Q::zero());
    let (p, nil, lp, lnil) = if side == 1 {
        (
            Descriptor::new(AxisFilter::NonNegative, AxisFilter::Any),
            Descriptor::new(AxisFilter::Positive, AxisFilter::Any),
            Descriptor::new(AxisFilter::NonNegative, zero()),
            Descriptor::new(AxisFilter::Positive, zero()),
        )
    } else {
        (
            Descriptor::new(AxisFilter::Any, AxisFilter::NonNegative),
            Descriptor::new(AxisFilter::Any, AxisFilter::Positive),
            Descriptor::new(zero(), AxisFilter::NonNegative),
            Descriptor::new(zero(), AxisFilter::Positive),
        )
    };
    let g = &a.grading;
    RichardsonCheck {
        ambient: a.bracket_with(&g.part(&p), side) == g.part(&nil),
        levi: a.bracket_with(&g.part(&lp), side) == g.part(&lnil),
    }
}

/// The extra eigenvector of an almost even pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostEvenStructure {
    pub cell: Cell,
    pub integral_case: bool,
    /// `pq < 0` in the integral case, `p, q ∈ ½ℤ∖ℤ` and positive otherwise.
    pub permitted: bool,
    /// Rectangular and principal in `g_ZZ`; only asserted in the fractional case.
    pub fractional_consequences: Option<bool>,
}

pub fn almost_even_structure(
    a: &Analysis,
    report: &ClassificationReport,
) -> Result<AlmostEvenStructure, ClassifyError> {
    if !report.almost_even {
        return Err(ClassifyError::Precondition("pair is not almost even".into()));
    }
    let lim = a.grading.graded(&a.lim_h(LimitMode::Both))?;
    let extra: Vec<Cell> = a
        .z_e
        .cells
        .iter()
        .filter(|(c, s)| s.dim() > lim.dim_at(c))
        .map(|(c, _)| c.clone())
        .collect();
    let [cell] = extra.as_slice() else {
        return Err(ClassifyError::Hypothesis(format!(
            "expected one extra cell, found {}",
            extra.len()
        )));
    };
    if a.z_e.dim_at(cell) != lim.dim_at(cell) + 1 || !lim.space.is_zero() && !a.z_e.space.contains_subspace(&lim.space)
    {
        return Err(ClassifyError::Hypothesis("z(e) is not lim h plus a line".into()));
    }
    let integral_case = cell.is_integral();
    let half = |x: &Q| !x.is_integer() && (x * Q::from_integer(2.into())).is_integer();
    let permitted = if integral_case {
        (&cell.p * &cell.q).is_negative()
    } else {
        half(&cell.p) && half(&cell.q) && cell.p.is_positive() && cell.q.is_positive()
    };
    let fractional_consequences = (!integral_case).then(|| {
        let zz = a.z_e.restrict(Descriptor::integral());
        report.rectangular && zz.dim() == a.alg.rank()
    });
    Ok(AlmostEvenStructure {
        cell: cell.clone(),
        integral_case,
        permitted,
        fractional_consequences,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleSpectrum {
    pub corner: Cell,
    pub dim: usize,
    pub full_rectangle: bool,
    pub cells_one_dimensional: bool,
    pub dimension_formula: bool,
}

impl RectangleSpectrum {
    pub fn passed(&self) -> bool {
        self.full_rectangle && self.cells_one_dimensional && self.dimension_formula
    }
}

/// Spectrum of `(h1, h2)` on a module `V` whose `⟨e1, e2⟩`-fixed space is a
/// line: it must fill the rectangle with corners `±(p0, q0)` with 1-dimensional
/// cells, and `dim V = (2p0 + 1)(2q0 + 1)`.
pub fn rectangle_spectrum_check(
    h1: &QMatrix,
    h2: &QMatrix,
    e1: &QMatrix,
    e2: &QMatrix,
) -> Result<RectangleSpectrum, ClassifyError> {
    let dim = h1.rows();
    let fixed = QMatrix::vstack(dim, &[e1, e2]).kernel();
    if fixed.dim() != 1 {
        return Err(ClassifyError::Hypothesis(format!(
            "fixed space of <e1,e2> has dimension {}",
            fixed.dim()
        )));
    }
    let parts = joint_eigenspaces(dim, &[h1.clone(), h2.clone()])?;
    let cells: Vec<(Cell, usize)> = parts
        .iter()
        .map(|p| {
            (
                Cell::new(p.eigenvalues[0].clone(), p.eigenvalues[1].clone()),
                p.space.dim(),
            )
        })
        .collect();
    let p0 = cells.iter().map(|(c, _)| c.p.clone()).max().expect("nonempty module");
    let q0 = cells.iter().map(|(c, _)| c.q.clone()).max().expect("nonempty module");
    let two = Q::from_integer(2.into());
    let one = Q::from_integer(1.into());
    let width = &two * &p0 + &one;
    let height = &two * &q0 + &one;
    let mut expected = Vec::new();
    if width.is_integer() && height.is_integer() && width.is_positive() && height.is_positive() {
        let (w, h) = (width.to_integer(), height.to_integer());
        let mut m = Q::zero();
        while m < Q::from_integer(w.clone()) {
            let mut n = Q::zero();
            while n < Q::from_integer(h.clone()) {
                expected.push(Cell::new(&p0 - &m, &q0 - &n));
                n += &one;
            }
            m += &one;
        }
    }
    expected.sort();
    let mut got: Vec<Cell> = cells.iter().map(|(c, _)| c.clone()).collect();
    got.sort();
    let rect_dim = (&width * &height).to_integer();
    Ok(RectangleSpectrum {
        corner: Cell::new(p0, q0),
        dim,
        full_rectangle: got == expected,
        cells_one_dimensional: cells.iter().all(|(_, d)| *d == 1),
        dimension_formula: (&width * &height).is_integer() && rect_dim == dim.into(),
    })
}

/// Operators of `h1, h2, e1, e2` on `g_fr`, in the coordinates of its basis.
pub fn fractional_module(a: &Analysis) -> Result<Option<[QMatrix; 4]>, ClassifyError> {
    let (_, fr) = a.grading.integral_fractional_split();
    if fr.space.is_zero() {
        return Ok(None);
    }
    let ops = [&a.ch.h1, &a.ch.h2, &a.pair.e1, &a.pair.e2].map(|x| a.alg.ad(x));
    let mut out = Vec::with_capacity(4);
    for op in &ops {
        out.push(fr.space.restrict(op)?);
    }
    Ok(Some(out.try_into().expect("four operators")))
}
