use num::{One, Zero};

use super::{ExactError, Poly, QMatrix, Subspace, Q};

/// A joint eigenspace: one eigenvalue per input operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenspace {
    pub eigenvalues: Vec<Q>,
    pub space: Subspace,
}

/// Minimal polynomial (monic) by accumulating Krylov sequences of unit vectors.
pub fn minimal_polynomial(m: &QMatrix) -> Result<Poly, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut covered = Subspace::zero(n);
    let mut result = Poly::one();
    for k in 0..n {
        if covered.is_full() {
            break;
        }
        let mut start = vec![Q::zero(); n];
        start[k] = Q::one();
        if covered.contains(&start) {
            continue;
        }
        let mut chain = vec![start];
        let local = loop {
            let next = m.apply(chain.last().unwrap());
            let span = QMatrix::from_columns(n, &chain);
            match span.solve_affine(&next) {
                Ok(sol) => {
                    // next = sum c_i M^i v, so x^d - sum c_i x^i kills v.
                    let mut coeffs: Vec<Q> = sol.particular.into_iter().map(|c| -c).collect();
                    coeffs.push(Q::one());
                    break Poly::new(coeffs);
                }
                Err(ExactError::Inconsistent) => chain.push(next),
                Err(e) => return Err(e),
            }
        };
        result = result.lcm(&local);
        let mut vecs = covered.basis_vectors();
        vecs.extend(chain);
        covered = Subspace::from_vectors(n, vecs);
    }
    Ok(result)
}

pub fn minpoly_is_squarefree(m: &QMatrix) -> bool {
    minimal_polynomial(m).map(|p| p.is_squarefree()).unwrap_or(false)
}

fn diagonal_entries(m: &QMatrix) -> Option<Vec<Q>> {
    let n = m.rows();
    for r in 0..n {
        for (c, v) in m.row(r).iter().enumerate() {
            if r != c && !v.is_zero() {
                return None;
            }
        }
    }
    Some((0..n).map(|i| m.get(i, i).clone()).collect())
}

/// Splits `space` into eigenspaces of `op`, which must leave it invariant.
fn split(op: &QMatrix, space: &Subspace) -> Result<Vec<(Q, Subspace)>, ExactError> {
    let n = space.ambient_dim();
    let r = space.restrict(op)?;
    if let Some(diag) = diagonal_entries(&r) {
        let mut values: Vec<Q> = diag.clone();
        values.sort();
        values.dedup();
        return Ok(values
            .into_iter()
            .map(|lam| {
                let vecs = (0..diag.len())
                    .filter(|&i| diag[i] == lam)
                    .map(|i| space.basis().row(i).to_vec())
                    .collect();
                (lam, Subspace::from_vectors(n, vecs))
            })
            .collect());
    }
    let minpoly = minimal_polynomial(&r)?;
    if !minpoly.is_squarefree() {
        return Err(ExactError::NotSemisimple);
    }
    let roots = minpoly.rational_roots();
    if Some(roots.len()) != minpoly.degree() {
        return Err(ExactError::IrrationalSpectrum);
    }
    let mut out = Vec::with_capacity(roots.len());
    for lam in roots {
        let local = r.shift(&lam).kernel();
        let vecs = local.basis_vectors().iter().map(|c| space.combine(c)).collect();
        out.push((lam, Subspace::from_vectors(n, vecs)));
    }
    Ok(out)
}

/// Simultaneous eigenspace decomposition of pairwise-commuting operators,
/// ordered lexicographically by eigenvalue tuple.
pub fn joint_eigenspaces(ambient: usize, ops: &[QMatrix]) -> Result<Vec<Eigenspace>, ExactError> {
    for op in ops {
        if op.rows() != ambient || op.cols() != ambient {
            return Err(ExactError::DimensionMismatch {
                expected: ambient,
                found: op.rows(),
            });
        }
    }
    let mut parts = vec![Eigenspace {
        eigenvalues: Vec::new(),
        space: Subspace::full(ambient),
    }];
    for op in ops {
        let mut next = Vec::new();
        for part in parts {
            if part.space.is_zero() {
                continue;
            }
            for (lam, space) in split(op, &part.space)? {
                let mut eigenvalues = part.eigenvalues.clone();
                eigenvalues.push(lam);
                next.push(Eigenspace { eigenvalues, space });
            }
        }
        parts = next;
    }
    parts.sort_by(|a, b| a.eigenvalues.cmp(&b.eigenvalues));
    Ok(parts)
}
