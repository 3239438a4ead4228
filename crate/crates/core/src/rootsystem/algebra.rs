use std::ops::{Add, Deref, Neg, Sub};

use super::roots::{root_label, RootSystem};
use super::RootError;
use crate::exactla::{QMatrix, Subspace, Q};
use num::{One, Zero};

/// A coordinate vector in the basis of some [`LieAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Q>);

impl Element {
    pub fn new(coords: Vec<Q>) -> Self {
        Element(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Element(vec![Q::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![Q::zero(); dim];
        v[i] = Q::one();
        Element(v)
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Q> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Q) -> Element {
        Element(self.0.iter().map(|x| x * s).collect())
    }

    /// Indices and values of nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.0.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }
}

impl Deref for Element {
    type Target = [Q];
    fn deref(&self) -> &[Q] {
        &self.0
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        Element(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        Element(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element(self.0.iter().map(|a| -a).collect())
    }
}

/// What a basis vector is: a simple coroot `h_i`, or a root vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Cartan(usize),
    /// Index into the positive roots; `positive == false` is `e_{-root}`.
    Root {
        index: usize,
        positive: bool,
    },
}

/// Matrices of the basis vectors in a faithful representation, together with
/// a precomputed coordinate map back into the algebra.
#[derive(Clone, Debug)]
pub struct Representation {
    degree: usize,
    matrices: Vec<QMatrix>,
    pivots: Vec<usize>,
    solver: QMatrix,
}

impl Representation {
    pub(crate) fn new(degree: usize, matrices: Vec<QMatrix>) -> Result<Self, RootError> {
        let flat: Vec<Vec<Q>> = matrices.iter().map(|m| m.entries().to_vec()).collect();
        let basis = QMatrix::from_row_vecs(degree * degree, &flat);
        let (_, pivots) = basis.rref();
        if pivots.len() != matrices.len() {
            return Err(RootError::Construction(
                "representation matrices are linearly dependent".into(),
            ));
        }
        // Coordinates are read off the pivot entries: c · B[:, pivots] = x[pivots].
        let cols: Vec<Vec<Q>> = pivots.iter().map(|&p| basis.column(p)).collect();
        let square = QMatrix::from_columns(matrices.len(), &cols);
        let solver = square.inverse().map_err(|e| RootError::Construction(e.to_string()))?;
        Ok(Representation {
            degree,
            matrices,
            pivots,
            solver,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self, i: usize) -> &QMatrix {
        &self.matrices[i]
    }

    pub fn to_matrix(&self, x: &[Q]) -> QMatrix {
        let n = self.degree;
        let mut out = QMatrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.matrices[i].scale(c)).expect("square matrices");
        }
        out
    }

    /// Coordinates of a matrix, or `None` when it is not in the image.
    pub fn coordinates(&self, m: &QMatrix) -> Option<Vec<Q>> {
        if m.rows() != self.degree || m.cols() != self.degree {
            return None;
        }
        let picked: Vec<Q> = self.pivots.iter().map(|&p| m.entries()[p].clone()).collect();
        let coords = self.solver.left_apply(&picked);
        (self.to_matrix(&coords) == *m).then_some(coords)
    }
}

/// A finite-dimensional Lie algebra over the rationals with a root-adapted
/// basis: simple coroots `h_1..h_l`, then `e_r` for each positive root, then
/// `e_{-r}` in the same order.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    roots: RootSystem,
    kinds: Vec<BasisKind>,
    table: Vec<Vec<(usize, Q)>>,
    killing: QMatrix,
    rep: Option<Representation>,
}

impl LieAlgebra {
    /// Assembles an algebra from its bracket on basis vectors;
    /// `bracket(i, j)` must return the sparse coordinates of `[b_i, b_j]`.
    pub(crate) fn from_table(
        name: String,
        roots: RootSystem,
        table: Vec<Vec<(usize, Q)>>,
        rep: Option<Representation>,
    ) -> LieAlgebra {
        let l = roots.rank();
        let p = roots.num_positive();
        let mut kinds: Vec<BasisKind> = (0..l).map(BasisKind::Cartan).collect();
        kinds.extend((0..p).map(|index| BasisKind::Root { index, positive: true }));
        kinds.extend((0..p).map(|index| BasisKind::Root { index, positive: false }));
        let mut alg = LieAlgebra {
            name,
            roots,
            kinds,
            table,
            killing: QMatrix::zeros(0, 0),
            rep,
        };
        alg.killing = alg.compute_killing();
        alg
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.kinds.len()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn kind(&self, i: usize) -> BasisKind {
        self.kinds[i]
    }

    pub fn representation(&self) -> Option<&Representation> {
        self.rep.as_ref()
    }

    /// Weight of a basis vector in simple-root coordinates (zero on the Cartan).
    pub fn weight(&self, i: usize) -> Vec<i64> {
        match self.kinds[i] {
            BasisKind::Cartan(_) => vec![0; self.rank()],
            BasisKind::Root { index, positive } => {
                let r = &self.roots.positive_roots()[index];
                if positive {
                    r.clone()
                } else {
                    r.iter().map(|x| -x).collect()
                }
            }
        }
    }

    /// Basis index of the root vector for a (positive or negative) root.
    pub fn root_vector_index(&self, root: &[i64]) -> Option<usize> {
        let l = self.rank();
        let p = self.roots.num_positive();
        if let Some(k) = self.roots.positive_index(root) {
            return Some(l + k);
        }
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        self.roots.positive_index(&neg).map(|k| l + p + k)
    }

    pub fn basis_label(&self, i: usize) -> String {
        match self.kinds[i] {
            BasisKind::Cartan(j) => format!("h[{}]", j + 1),
            BasisKind::Root { index, positive } => {
                let r = root_label(&self.roots.positive_roots()[index]);
                if positive {
                    format!("e[{r}]")
                } else {
                    format!("f[{r}]")
                }
            }
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    /// Sparse coordinates of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Element {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        let ys: Vec<(usize, &Q)> = y.iter().enumerate().filter(|(_, b)| !b.is_zero()).collect();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &ys {
                let ab = a * b;
                for (k, c) in &self.table[i * n + j] {
                    out[*k] += &ab * c;
                }
            }
        }
        Element::new(out)
    }

    /// Matrix of `ad x`; column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &[Q]) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    let v = m.get(*k, j) + a * c;
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    pub fn killing(&self) -> &QMatrix {
        &self.killing
    }

    pub fn killing_form(&self, x: &[Q], y: &[Q]) -> Q {
        let ky = self.killing.apply(y);
        x.iter().zip(&ky).map(|(a, b)| a * b).sum()
    }

    fn coefficient(&self, i: usize, j: usize, k: usize) -> Q {
        self.table[i * self.dim() + j]
            .iter()
            .find(|(m, _)| *m == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::zero)
    }

    fn compute_killing(&self) -> QMatrix {
        // kappa(b_i, b_j) = sum_m coefficient of b_m in [b_i, [b_j, b_m]]
        let n = self.dim();
        let mut k = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut s = Q::zero();
                for m in 0..n {
                    for (t, c) in &self.table[j * n + m] {
                        let d = self.coefficient(i, *t, m);
                        if !d.is_zero() {
                            s += c * d;
                        }
                    }
                }
                if !s.is_zero() {
                    k.set(j, i, s.clone());
                    k.set(i, j, s);
                }
            }
        }
        k
    }

    /// The Cartan subalgebra spanned by `h_1..h_l`.
    pub fn cartan_subalgebra(&self) -> Subspace {
        let vecs = (0..self.rank()).map(|i| self.basis_element(i).into_coords()).collect();
        Subspace::from_vectors(self.dim(), vecs)
    }

    /// Whether `x` lies in the span of `h_1..h_l`.
    pub fn in_cartan(&self, x: &[Q]) -> bool {
        x[self.rank()..].iter().all(Zero::is_zero)
    }

    /// `alpha_j(h)` for `h` in the Cartan subalgebra.
    pub fn labels_of(&self, h: &[Q]) -> Result<Vec<Q>, RootError> {
        if !self.in_cartan(h) {
            return Err(RootError::NotInCartan);
        }
        let l = self.rank();
        let cartan = self.roots.cartan();
        Ok((0..l)
            .map(|j| (0..l).map(|i| &h[i] * Q::from_integer(cartan[i][j].into())).sum())
            .collect())
    }

    /// Value of an arbitrary root (simple-root coordinates) on a Cartan element.
    pub fn root_value(&self, root: &[i64], h: &[Q]) -> Result<Q, RootError> {
        let labels = self.labels_of(h)?;
        Ok(root
            .iter()
            .zip(&labels)
            .map(|(c, v)| v * Q::from_integer((*c).into()))
            .sum())
    }

    /// The Cartan element `h` with `alpha_j(h) = labels[j]` for every simple root.
    pub fn element_from_labels(&self, labels: &[Q]) -> Result<Element, RootError> {
        let l = self.rank();
        if labels.len() != l {
            return Err(RootError::LabelCount {
                expected: l,
                found: labels.len(),
            });
        }
        // sum_i c_i cartan[i][j] = labels[j]  <=>  cartan^T c = labels
        let sol = self
            .roots
            .cartan_matrix()
            .transpose()
            .solve_affine(labels)
            .map_err(|e| RootError::Construction(e.to_string()))?;
        let mut coords = sol.particular;
        coords.resize(self.dim(), Q::zero());
        Ok(Element::new(coords))
    }
}

/// Standalone form of [`LieAlgebra::element_from_labels`].
pub fn element_from_labels(alg: &LieAlgebra, labels: &[Q]) -> Result<Element, RootError> {
    alg.element_from_labels(labels)
}
