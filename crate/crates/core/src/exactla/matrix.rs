use std::fmt;

use num::{One, Signed, Zero};

use super::{ExactError, Q};
use crate::exactla::Subspace;

/// Dense matrix of exact rationals, row-major.
///
/// Vectors are acted on as columns: `m.apply(x)` is `m · x`. Subspaces are
/// stored as row vectors, so `kernel` lives in `Q^cols` and `image` in `Q^rows`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

/// Result of a consistent affine solve `a · x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Q>,
    pub kernel: Subspace,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, v) in entries.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ExactError::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(QMatrix { rows: r, cols: c, data })
    }

    /// Builds a matrix with a known number of columns; handles the zero-row case.
    pub fn from_row_vecs(cols: usize, rows: &[Vec<Q>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row.iter().cloned());
        }
        QMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let v: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        Self::from_rows(v).expect("ragged integer rows")
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    /// `self · x` for a column vector `x`.
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        assert_eq!(x.len(), self.cols, "apply: dimension mismatch");
        let nz: Vec<usize> = (0..x.len()).filter(|&j| !x[j].is_zero()).collect();
        let mut out = vec![Q::zero(); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            let row = self.row(r);
            let mut acc = Q::zero();
            for &j in &nz {
                if !row[j].is_zero() {
                    acc += &row[j] * &x[j];
                }
            }
            *slot = acc;
        }
        out
    }

    /// `y · self` for a row vector `y`.
    pub fn left_apply(&self, y: &[Q]) -> Vec<Q> {
        assert_eq!(y.len(), self.rows, "left_apply: dimension mismatch");
        let mut out = vec![Q::zero(); self.cols];
        for (r, yr) in y.iter().enumerate() {
            if yr.is_zero() {
                continue;
            }
            for (c, m) in self.row(r).iter().enumerate() {
                if !m.is_zero() {
                    out[c] += yr * m;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix, ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &Q) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self - lambda · I`.
    pub fn shift(&self, lambda: &Q) -> QMatrix {
        assert!(self.is_square(), "shift of a non-square matrix");
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i) - lambda;
            m.set(i, i, v);
        }
        m
    }

    /// Stacks `blocks` vertically. All blocks must share a column count.
    pub fn vstack(cols: usize, blocks: &[&QMatrix]) -> QMatrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack: column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        QMatrix { rows, cols, data }
    }

    pub fn trace(&self) -> Q {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Reduced row-echelon form with leftmost exact pivots; returns the form and
    /// its pivot columns. Zero rows are dropped.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut rows: Vec<Vec<Q>> = self.row_vecs();
        let pivots = rref_in_place(&mut rows, self.cols);
        rows.truncate(pivots.len());
        (QMatrix::from_row_vecs(self.cols, &rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{x : self · x = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                let e = r.get(i, f);
                if !e.is_zero() {
                    v[p] = -e.clone();
                }
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.cols, vecs)
    }

    /// Column space `{self · x}`.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.rows, self.transpose().row_vecs())
    }

    pub fn determinant(&self) -> Result<Q, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = Q::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Q::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in (col + 1)..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<QMatrix, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Q>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(ExactError::Singular);
        }
        let rows: Vec<Vec<Q>> = aug.into_iter().map(|row| row[n..].to_vec()).collect();
        Ok(QMatrix::from_row_vecs(n, &rows))
    }

    /// Solves `self · x = b`.
    pub fn solve_affine(&self, b: &[Q]) -> Result<AffineSolution, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug: Vec<Vec<Q>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Err(ExactError::Inconsistent);
        }
        let mut particular = vec![Q::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            particular[p] = aug[i][self.cols].clone();
        }
        Ok(AffineSolution {
            particular,
            kernel: self.kernel(),
        })
    }

    /// Whether every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn max_abs(&self) -> Q {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}

/// In-place Gauss-Jordan elimination over the first `cols` columns.
/// Returns pivot columns; rows `0..pivots.len()` hold the reduced form.
pub(crate) fn rref_in_place(rows: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for v in rows[r][c..].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let support: Vec<usize> = (c..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                let t = &f * &pivot_row[j];
                row[j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    #[test]
    fn identity_has_trivial_kernel() {
        assert_eq!(QMatrix::identity(2).kernel().dim(), 0);
    }

    #[test]
    fn rank_one_kernel() {
        let m = QMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[q(-2), q(1)]));
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = vec![q(3), Q::new(1.into(), 2.into()), q(-7)];
        let s = QMatrix::identity(3).solve_affine(&b).unwrap();
        assert_eq!(s.particular, b);
        assert_eq!(s.kernel.dim(), 0);
    }

    #[test]
    fn zero_matrix_nonzero_rhs_is_inconsistent() {
        let r = QMatrix::zeros(2, 2).solve_affine(&[q(1), q(0)]);
        assert!(matches!(r, Err(ExactError::Inconsistent)));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = QMatrix::from_i64_rows(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(m.determinant().unwrap(), q(4));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), QMatrix::identity(3));
        assert!(matches!(
            QMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).inverse(),
            Err(ExactError::Singular)
        ));
    }
}
