use num::Zero;

use super::matrix::rref_in_place;
use super::{ExactError, QMatrix, Q};

/// A linear subspace of `Q^n`, held as the reduced row-echelon form of a basis.
///
/// Because the echelon form is unique, two subspaces are equal exactly when
/// their stored matrices are identical, so the derived `PartialEq` is
/// subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: QMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: QMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: QMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(ambient: usize, mut vecs: Vec<Vec<Q>>) -> Self {
        for v in &vecs {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let pivots = rref_in_place(&mut vecs, ambient);
        vecs.truncate(pivots.len());
        Subspace {
            ambient,
            basis: QMatrix::from_row_vecs(ambient, &vecs),
            pivots,
        }
    }

    pub fn span_of(ambient: usize, vecs: &[Vec<Q>]) -> Self {
        Self::from_vectors(ambient, vecs.to_vec())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis matrix (one row per basis vector).
    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Q>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `x` relative to the canonical basis, or `None` if `x` is
    /// not in the subspace. The echelon form makes the coordinates the entries
    /// of `x` at the pivot columns.
    pub fn coordinates(&self, x: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(x.len(), self.ambient, "coordinates: dimension mismatch");
        let coords: Vec<Q> = self.pivots.iter().map(|&p| x[p].clone()).collect();
        let back = self.combine(&coords);
        (back.as_slice() == x).then_some(coords)
    }

    /// Linear combination of basis vectors with the given coefficients.
    pub fn combine(&self, coeffs: &[Q]) -> Vec<Q> {
        self.basis.left_apply(coeffs)
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), ExactError> {
        if self.ambient != other.ambient {
            return Err(ExactError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        self.check_ambient(other)?;
        let mut vecs = self.basis_vectors();
        vecs.extend(other.basis_vectors());
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }

    pub fn sum_all<'a>(ambient: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let mut vecs = Vec::new();
        for p in parts {
            assert_eq!(p.ambient, ambient, "sum_all: ambient mismatch");
            vecs.extend(p.basis_vectors());
        }
        Subspace::from_vectors(ambient, vecs)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        // x = a·U = b·V  <=>  [U; -V]^T (a, b) = 0
        let (du, dv) = (self.dim(), other.dim());
        let mut m = QMatrix::zeros(self.ambient, du + dv);
        for i in 0..du {
            for (c, v) in self.basis.row(i).iter().enumerate() {
                if !v.is_zero() {
                    m.set(c, i, v.clone());
                }
            }
        }
        for i in 0..dv {
            for (c, v) in other.basis.row(i).iter().enumerate() {
                if !v.is_zero() {
                    m.set(c, du + i, -v.clone());
                }
            }
        }
        let ker = m.kernel();
        let vecs = ker
            .basis_vectors()
            .into_iter()
            .map(|ab| self.combine(&ab[..du]))
            .collect();
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }

    /// `{x : u^T · form · x = 0 for all u}`.
    pub fn orth_complement(&self, form: &QMatrix) -> Result<Subspace, ExactError> {
        if form.rows() != self.ambient || form.cols() != self.ambient {
            return Err(ExactError::DimensionMismatch {
                expected: self.ambient,
                found: form.rows(),
            });
        }
        if self.is_zero() {
            return Ok(Subspace::full(self.ambient));
        }
        let m = self.basis.mul(form)?;
        Ok(m.kernel())
    }

    /// Image `{m · x : x in self}`.
    pub fn image_under(&self, m: &QMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "image_under: dimension mismatch");
        let vecs = (0..self.dim()).map(|i| m.apply(self.basis.row(i))).collect();
        Subspace::from_vectors(m.rows(), vecs)
    }

    /// Matrix of `op` restricted to this (op-invariant) subspace, in canonical
    /// basis coordinates; column `i` holds the coordinates of `op · b_i`.
    pub fn restrict(&self, op: &QMatrix) -> Result<QMatrix, ExactError> {
        let k = self.dim();
        let mut columns = Vec::with_capacity(k);
        for i in 0..k {
            let img = op.apply(self.basis.row(i));
            let c = self.coordinates(&img).ok_or(ExactError::NotInvariant)?;
            columns.push(c);
        }
        Ok(QMatrix::from_columns(k, &columns))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn idempotence() {
        let u = Subspace::from_vectors(4, vec![v(&[1, 2, 0, 1]), v(&[0, 1, 1, 0])]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(u.sum(&u).unwrap(), u);
    }

    #[test]
    fn canonical_equality_ignores_spanning_set() {
        let a = Subspace::from_vectors(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::from_vectors(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::from_vectors(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_vectors(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::from_vectors(3, vec![v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b).unwrap().dim() + i.dim(), a.dim() + b.dim());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(ExactError::DimensionMismatch { .. })));
        assert!(matches!(a.intersect(&b), Err(ExactError::DimensionMismatch { .. })));
    }

    #[test]
    fn orth_complement_of_full_space_under_nondegenerate_form() {
        let form = QMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert!(Subspace::full(2).orth_complement(&form).unwrap().is_zero());
        let line = Subspace::from_vectors(2, vec![v(&[1, 0])]);
        assert_eq!(
            line.orth_complement(&form).unwrap(),
            Subspace::from_vectors(2, vec![v(&[1, 0])])
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let u = Subspace::from_vectors(3, vec![v(&[1, 2, 3]), v(&[0, 1, 4])]);
        let x = v(&[2, 5, 10]);
        let c = u.coordinates(&x).unwrap();
        assert_eq!(u.combine(&c), x);
        assert!(u.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
