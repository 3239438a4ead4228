//! The bi-grading `g = ⊕ g_{p,q}` of a characteristic, graded slices of
//! subspaces, and the filtrations and limits along a nilpotent pair.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::exactla::{joint_eigenspaces, ExactError, QMatrix, Subspace, Q};
use crate::pairs::NilpotentPair;
use crate::rootsystem::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("target subspace is not graded by the characteristic")]
    NotGraded,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An eigenvalue pair `(p, q)`. Ordered with `q` descending, then `p`
/// ascending, which is the row-major reading order of a grid with `q` upward.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub p: Q,
    pub q: Q,
}

impl Cell {
    pub fn new(p: Q, q: Q) -> Self {
        Cell { p, q }
    }

    pub fn int(p: i64, q: i64) -> Self {
        Cell::new(Q::from_integer(p.into()), Q::from_integer(q.into()))
    }

    pub fn is_integral(&self) -> bool {
        self.p.is_integer() && self.q.is_integer()
    }

    pub fn add(&self, other: &Cell) -> Cell {
        Cell::new(&self.p + &other.p, &self.q + &other.q)
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        other.q.cmp(&self.q).then_with(|| self.p.cmp(&other.p))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Restriction of one coordinate of a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxisFilter {
    Any,
    Integers,
    /// `{0, 1, 2, ...}`
    Naturals,
    /// `{1, 2, ...}`
    PositiveIntegers,
    NonNegative,
    Positive,
    Negative,
    Fractional,
    Exactly(Q),
}

impl AxisFilter {
    pub fn accepts(&self, x: &Q) -> bool {
        match self {
            AxisFilter::Any => true,
            AxisFilter::Integers => x.is_integer(),
            AxisFilter::Naturals => x.is_integer() && !x.is_negative(),
            AxisFilter::PositiveIntegers => x.is_integer() && x.is_positive(),
            AxisFilter::NonNegative => !x.is_negative(),
            AxisFilter::Positive => x.is_positive(),
            AxisFilter::Negative => x.is_negative(),
            AxisFilter::Fractional => !x.is_integer(),
            AxisFilter::Exactly(v) => x == v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descriptor {
    pub p: AxisFilter,
    pub q: AxisFilter,
}

impl Descriptor {
    pub fn new(p: AxisFilter, q: AxisFilter) -> Self {
        Descriptor { p, q }
    }

    pub fn all() -> Self {
        Descriptor::new(AxisFilter::Any, AxisFilter::Any)
    }

    pub fn cell(c: &Cell) -> Self {
        Descriptor::new(AxisFilter::Exactly(c.p.clone()), AxisFilter::Exactly(c.q.clone()))
    }

    pub fn integral() -> Self {
        Descriptor::new(AxisFilter::Integers, AxisFilter::Integers)
    }

    pub fn naturals() -> Self {
        Descriptor::new(AxisFilter::Naturals, AxisFilter::Naturals)
    }

    pub fn accepts(&self, c: &Cell) -> bool {
        self.p.accepts(&c.p) && self.q.accepts(&c.q)
    }
}

/// A graded subspace split into its cell components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSlice {
    pub descriptor: Descriptor,
    pub space: Subspace,
    pub cells: BTreeMap<Cell, Subspace>,
}

impl GradedSlice {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn cell(&self, c: &Cell) -> Option<&Subspace> {
        self.cells.get(c)
    }

    pub fn dim_at(&self, c: &Cell) -> usize {
        self.cells.get(c).map_or(0, Subspace::dim)
    }

    /// `(cell, dim)` in cell order, one entry per nonzero cell.
    pub fn dims(&self) -> Vec<(Cell, usize)> {
        self.cells.iter().map(|(c, s)| (c.clone(), s.dim())).collect()
    }

    /// Each cell repeated by its dimension.
    pub fn eigenvalues(&self) -> Vec<Cell> {
        self.cells
            .iter()
            .flat_map(|(c, s)| std::iter::repeat_n(c.clone(), s.dim()))
            .collect()
    }

    pub fn restrict(&self, descriptor: Descriptor) -> GradedSlice {
        let cells: BTreeMap<Cell, Subspace> = self
            .cells
            .iter()
            .filter(|(c, _)| descriptor.accepts(c))
            .map(|(c, s)| (c.clone(), s.clone()))
            .collect();
        let space = Subspace::sum_all(self.space.ambient_dim(), cells.values());
        GradedSlice {
            descriptor,
            space,
            cells,
        }
    }
}

/// Simultaneous eigenspace decomposition under `(ad h1, ad h2)`.
#[derive(Clone, Debug)]
pub struct BiGrading {
    dim: usize,
    cells: BTreeMap<Cell, Subspace>,
    order: Vec<(Cell, std::ops::Range<usize>)>,
    inverse: QMatrix,
}

impl BiGrading {
    pub fn new(alg: &LieAlgebra, h1: &[Q], h2: &[Q]) -> Result<Self, GradingError> {
        let dim = alg.dim();
        let parts = joint_eigenspaces(dim, &[alg.ad(h1), alg.ad(h2)])?;
        let mut cells = BTreeMap::new();
        for part in parts {
            let mut ev = part.eigenvalues.into_iter();
            let p = ev.next().expect("two operators");
            let q = ev.next().expect("two operators");
            cells.insert(Cell::new(p, q), part.space);
        }
        let mut rows = Vec::with_capacity(dim);
        let mut order = Vec::with_capacity(cells.len());
        for (c, s) in &cells {
            let start = rows.len();
            rows.extend(s.basis_vectors());
            order.push((c.clone(), start..rows.len()));
        }
        let inverse = QMatrix::from_row_vecs(dim, &rows).inverse()?;
        Ok(BiGrading {
            dim,
            cells,
            order,
            inverse,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &BTreeMap<Cell, Subspace> {
        &self.cells
    }

    pub fn cell(&self, c: &Cell) -> Option<&Subspace> {
        self.cells.get(c)
    }

    pub fn dim_at(&self, c: &Cell) -> usize {
        self.cells.get(c).map_or(0, Subspace::dim)
    }

    /// The support `Γ`.
    pub fn support(&self) -> Vec<Cell> {
        self.cells.keys().cloned().collect()
    }

    pub fn is_integral(&self) -> bool {
        self.cells.keys().all(Cell::is_integral)
    }

    /// Largest denominator among all eigenvalues.
    pub fn max_denominator(&self) -> num::BigInt {
        self.cells
            .keys()
            .flat_map(|c| [c.p.denom().clone(), c.q.denom().clone()])
            .max()
            .unwrap_or_else(num::BigInt::one)
    }

    /// Components of `x` in each cell, zero components omitted.
    pub fn decompose(&self, x: &[Q]) -> Vec<(Cell, Vec<Q>)> {
        let coeffs = self.inverse.left_apply(x);
        let mut out = Vec::new();
        for (c, range) in &self.order {
            if coeffs[range.clone()].iter().all(Zero::is_zero) {
                continue;
            }
            out.push((c.clone(), self.cells[c].combine(&coeffs[range.clone()])));
        }
        out
    }

    /// Splits a graded subspace into cells; fails if it is not graded.
    pub fn graded(&self, target: &Subspace) -> Result<GradedSlice, GradingError> {
        let mut pieces: BTreeMap<Cell, Vec<Vec<Q>>> = BTreeMap::new();
        for v in target.basis_vectors() {
            for (c, comp) in self.decompose(&v) {
                pieces.entry(c).or_default().push(comp);
            }
        }
        let cells: BTreeMap<Cell, Subspace> = pieces
            .into_iter()
            .map(|(c, vs)| (c, Subspace::from_vectors(self.dim, vs)))
            .collect();
        let total: usize = cells.values().map(Subspace::dim).sum();
        if total != target.dim() {
            return Err(GradingError::NotGraded);
        }
        Ok(GradedSlice {
            descriptor: Descriptor::all(),
            space: target.clone(),
            cells,
        })
    }

    pub fn slice(&self, target: &Subspace, descriptor: Descriptor) -> Result<GradedSlice, GradingError> {
        Ok(self.graded(target)?.restrict(descriptor))
    }

    /// `g_D`: the sum of the cells accepted by the descriptor.
    pub fn part(&self, descriptor: &Descriptor) -> Subspace {
        Subspace::sum_all(
            self.dim,
            self.cells.iter().filter(|(c, _)| descriptor.accepts(c)).map(|(_, s)| s),
        )
    }

    /// `(g_ZZ, g_fr)`.
    pub fn integral_fractional_split(&self) -> (GradedSlice, GradedSlice) {
        let full = self.whole();
        let fractional = full.cells.iter().filter(|(c, _)| !c.is_integral());
        let fr_cells: BTreeMap<Cell, Subspace> = fractional.map(|(c, s)| (c.clone(), s.clone())).collect();
        let fr = GradedSlice {
            descriptor: Descriptor::all(),
            space: Subspace::sum_all(self.dim, fr_cells.values()),
            cells: fr_cells,
        };
        (full.restrict(Descriptor::integral()), fr)
    }

    pub fn whole(&self) -> GradedSlice {
        GradedSlice {
            descriptor: Descriptor::all(),
            space: Subspace::full(self.dim),
            cells: self.cells.clone(),
        }
    }

    /// `𝔥 = g_{0,0}`.
    pub fn zero_cell(&self) -> Subspace {
        self.cells
            .get(&Cell::int(0, 0))
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.dim))
    }
}

/// Powers of `ad e1` and `ad e2` up to nilpotency, with their kernels.
#[derive(Clone, Debug)]
pub struct Filtration {
    powers: [Vec<QMatrix>; 2],
    kernels: [Vec<Subspace>; 2],
    dim: usize,
}

/// Which limit to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitMode {
    E1,
    E2,
    Both,
}

impl Filtration {
    pub fn new(alg: &LieAlgebra, pair: &NilpotentPair) -> Self {
        let dim = alg.dim();
        let chain = |x: &[Q]| {
            let ad = alg.ad(x);
            let mut powers = vec![QMatrix::identity(dim)];
            let mut kernels = vec![Subspace::zero(dim)];
            while !powers.last().unwrap().is_zero() {
                assert!(powers.len() <= dim + 1, "element is not ad-nilpotent");
                let next = ad.mul(powers.last().unwrap()).expect("square");
                kernels.push(next.kernel());
                powers.push(next);
            }
            (powers, kernels)
        };
        let (p1, k1) = chain(&pair.e1);
        let (p2, k2) = chain(&pair.e2);
        Filtration {
            powers: [p1, p2],
            kernels: [k1, k2],
            dim,
        }
    }

    /// Nilpotency index `N` of `ad e_i`: `(ad e_i)^N = 0`, `N ≥ 1`.
    pub fn index(&self, i: usize) -> usize {
        self.powers[i - 1].len() - 1
    }

    /// `(ad e_i)^k`; zero beyond the nilpotency index.
    pub fn power(&self, i: usize, k: usize) -> QMatrix {
        let ps = &self.powers[i - 1];
        ps.get(k).cloned().unwrap_or_else(|| QMatrix::zeros(self.dim, self.dim))
    }

    /// `ker (ad e_i)^{k+1}` for `k ≥ -1`.
    fn kernel(&self, i: usize, k: i64) -> Subspace {
        let ks = &self.kernels[i - 1];
        let idx = (k + 1).max(0) as usize;
        ks.get(idx).cloned().unwrap_or_else(|| Subspace::full(self.dim))
    }

    /// `M(i, j)`; `None` stands for `∗` and negative indices give `0`.
    pub fn part(&self, m: &Subspace, i: Option<i64>, j: Option<i64>) -> Subspace {
        let mut out = m.clone();
        if let Some(i) = i {
            out = out.intersect(&self.kernel(1, i)).expect("dims");
        }
        if let Some(j) = j {
            out = out.intersect(&self.kernel(2, j)).expect("dims");
        }
        out
    }

    /// `(ad e1)^i (ad e2)^j M(i, j)`.
    pub fn graded_piece(&self, m: &Subspace, i: usize, j: usize) -> Subspace {
        let part = self.part(m, Some(i as i64), Some(j as i64));
        part.image_under(&self.power(2, j)).image_under(&self.power(1, i))
    }

    pub fn limit(&self, m: &Subspace, mode: LimitMode) -> Subspace {
        let n1 = self.index(1);
        let n2 = self.index(2);
        let mut pieces = Vec::new();
        match mode {
            LimitMode::E1 => {
                for i in 0..n1 {
                    let part = self.part(m, Some(i as i64), None);
                    pieces.push(part.image_under(&self.power(1, i)));
                }
            }
            LimitMode::E2 => {
                for j in 0..n2 {
                    let part = self.part(m, None, Some(j as i64));
                    pieces.push(part.image_under(&self.power(2, j)));
                }
            }
            LimitMode::Both => {
                for i in 0..n1 {
                    for j in 0..n2 {
                        pieces.push(self.graded_piece(m, i, j));
                    }
                }
            }
        }
        Subspace::sum_all(self.dim, pieces.iter())
    }
}
