//! Matrix realizations of the classical algebras in a Witt basis.
//!
//! `sl_{l+1}` uses all traceless matrices; `so_N` and `sp_2l` preserve the
//! bilinear form with antidiagonal Gram matrix (`[[0, K], [-K, 0]]` in the
//! symplectic case, `K` the antidiagonal of ones). With `i' = N + 1 - i` the
//! Cartan subalgebra is diagonal and a matrix unit `v_ij` pairs with `v_j'i'`.

use num::{One, Zero};

use super::algebra::{LieAlgebra, Representation};
use super::roots::RootSystem;
use super::types::{CartanType, Family};
use super::RootError;
use crate::exactla::{q, QMatrix, Subspace, Q};

fn degree(family: Family, l: usize) -> usize {
    match family {
        Family::A => l + 1,
        Family::B => 2 * l + 1,
        Family::C | Family::D => 2 * l,
        _ => unreachable!("not a classical family"),
    }
}

/// The invariant form, or `None` for `sl`.
fn form(family: Family, n: usize) -> Option<QMatrix> {
    let mut j = QMatrix::zeros(n, n);
    match family {
        Family::A => return None,
        Family::B | Family::D => {
            for i in 0..n {
                j.set(i, n - 1 - i, Q::one());
            }
        }
        Family::C => {
            let l = n / 2;
            for i in 0..n {
                let v = if i < l { q(1) } else { q(-1) };
                j.set(i, n - 1 - i, v);
            }
        }
        _ => unreachable!(),
    }
    Some(j)
}

/// Membership in the classical algebra as linear conditions on the `n^2` entries.
fn membership(family: Family, n: usize) -> QMatrix {
    match form(family, n) {
        None => {
            let row: Vec<Q> = (0..n * n)
                .map(|k| if k / n == k % n { Q::one() } else { Q::zero() })
                .collect();
            QMatrix::from_row_vecs(n * n, &[row])
        }
        Some(j) => {
            // (X^T J + J X)_{ab} = sum_c X_{ca} J_{cb} + J_{ac} X_{cb}
            let mut rows = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let mut row = vec![Q::zero(); n * n];
                    for c in 0..n {
                        row[c * n + a] += j.get(c, b);
                        row[c * n + b] += j.get(a, c);
                    }
                    rows.push(row);
                }
            }
            QMatrix::from_row_vecs(n * n, &rows)
        }
    }
}

/// Diagonal of the simple coroot `h_i` (0-based).
fn coroot_diagonal(family: Family, l: usize, i: usize) -> Vec<i64> {
    let n = degree(family, l);
    let mut d = vec![0i64; n];
    let prime = |k: usize| n - 1 - k;
    match family {
        Family::A => {
            d[i] = 1;
            d[i + 1] = -1;
        }
        _ if i + 1 < l => {
            d[i] = 1;
            d[i + 1] = -1;
            d[prime(i)] = -1;
            d[prime(i + 1)] = 1;
        }
        Family::B => {
            d[i] = 2;
            d[prime(i)] = -2;
        }
        Family::C => {
            d[i] = 1;
            d[prime(i)] = -1;
        }
        Family::D => {
            d[i - 1] = 1;
            d[i] = 1;
            d[prime(i)] = -1;
            d[prime(i - 1)] = -1;
        }
        _ => unreachable!(),
    }
    d
}

fn unflatten(n: usize, v: &[Q]) -> QMatrix {
    let rows: Vec<Vec<Q>> = v.chunks(n).map(|c| c.to_vec()).collect();
    QMatrix::from_row_vecs(n, &rows)
}

fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    ab.add(&ba.scale(&q(-1))).expect("square")
}

/// The classical algebra of type `family` and rank `l` as matrices, with the
/// same basis layout as [`super::chevalley_algebra`].
pub fn classical_algebra(family: Family, l: usize) -> Result<LieAlgebra, RootError> {
    if !family.is_classical() {
        return Err(RootError::Construction(format!(
            "{} has no classical matrix realization",
            family.letter()
        )));
    }
    let rs = RootSystem::new(CartanType::simple(family, l)?);
    let n = degree(family, l);
    let cond = membership(family, n);
    let h_diag: Vec<Vec<i64>> = (0..l).map(|i| coroot_diagonal(family, l, i)).collect();
    let h_mats: Vec<QMatrix> = h_diag
        .iter()
        .map(|d| QMatrix::diagonal(&d.iter().map(|&x| q(x)).collect::<Vec<_>>()))
        .collect();

    // Root vector for `root`: the unique (up to scale) element of the algebra
    // supported on matrix units of that weight.
    let root_vector = |root: &[i64]| -> Result<QMatrix, RootError> {
        let target: Vec<i64> = (0..l).map(|i| rs.pairing(root, i)).collect();
        let units: Vec<usize> = (0..n * n)
            .filter(|&k| {
                let (a, b) = (k / n, k % n);
                (0..l).all(|i| h_diag[i][a] - h_diag[i][b] == target[i])
            })
            .collect();
        let sub: Vec<Vec<Q>> = (0..cond.rows())
            .map(|r| units.iter().map(|&k| cond.get(r, k).clone()).collect())
            .collect();
        let ker = QMatrix::from_row_vecs(units.len(), &sub).kernel();
        if ker.dim() != 1 {
            return Err(RootError::Construction(format!(
                "root space of dimension {}",
                ker.dim()
            )));
        }
        let mut flat = vec![Q::zero(); n * n];
        for (c, &k) in ker.basis().row(0).iter().zip(&units) {
            flat[k] = c.clone();
        }
        Ok(unflatten(n, &flat))
    };

    // Simple root vectors are normalized by their echelon form; every other
    // positive root vector is [e_a, e_b]/(p+1) over its extraspecial pair,
    // which makes the result a Chevalley basis.
    let pos = rs.positive_roots();
    let mut positives: Vec<QMatrix> = Vec::with_capacity(pos.len());
    let mut matrices = h_mats.clone();
    let mut negatives = Vec::new();
    for (xi_idx, r) in pos.iter().enumerate() {
        let extraspecial = (0..xi_idx).find_map(|a| {
            let rest: Vec<i64> = r.iter().zip(&pos[a]).map(|(x, y)| x - y).collect();
            rs.positive_index(&rest).map(|b| (a, b))
        });
        let e = match extraspecial {
            None => root_vector(r)?,
            Some((a, b)) => {
                let (alpha, beta) = (&pos[a], &pos[b]);
                let mut p = 0i64;
                loop {
                    let v: Vec<i64> = beta.iter().zip(alpha).map(|(x, y)| x - (p + 1) * y).collect();
                    if rs.is_root(&v) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                commutator(&positives[a], &positives[b]).scale(&Q::new(1.into(), (p + 1).into()))
            }
        };
        positives.push(e.clone());
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        let f = root_vector(&neg)?;
        let coroot = rs.coroot_coords(r);
        let mut hr = QMatrix::zeros(n, n);
        for (j, c) in coroot.iter().enumerate() {
            hr = hr.add(&h_mats[j].scale(&q(*c))).expect("square");
        }
        let ef = commutator(&e, &f);
        let pivot = (0..n).find(|&k| !hr.get(k, k).is_zero()).expect("nonzero coroot");
        let t = ef.get(pivot, pivot) / hr.get(pivot, pivot);
        let f = f.scale(&(Q::one() / t));
        debug_assert_eq!(commutator(&e, &f), hr);
        matrices.push(e);
        negatives.push(f);
    }
    matrices.extend(negatives);

    let rep = Representation::new(n, matrices.clone())?;
    let dim = matrices.len();
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let c = commutator(&matrices[i], &matrices[j]);
            if c.is_zero() {
                continue;
            }
            let coords = rep
                .coordinates(&c)
                .ok_or_else(|| RootError::Construction("bracket left the algebra".into()))?;
            table[i * dim + j] = coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        }
    }
    let name = rs.cartan_type().to_string();
    Ok(LieAlgebra::from_table(name, rs, table, Some(rep)))
}

/// The algebra for a type: classical families get their matrix realization,
/// the rest (and semisimple types) the abstract Chevalley construction.
pub fn build_algebra(ctype: &CartanType) -> Result<LieAlgebra, RootError> {
    match ctype.components() {
        [t] if t.family.is_classical() => classical_algebra(t.family, t.rank),
        _ => Ok(super::chevalley::chevalley_algebra(&RootSystem::new(ctype.clone()))),
    }
}

/// The subspace of `n x n` matrices (flattened) satisfying the membership
/// conditions; exposed for tests of the realization.
pub fn classical_matrix_space(family: Family, l: usize) -> Subspace {
    membership(family, degree(family, l)).kernel()
}

/// Matrix unit `v_ij` (1-based indices, as written in the literature).
pub fn matrix_unit(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m.set(i - 1, j - 1, Q::one());
    m
}
