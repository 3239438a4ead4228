use std::collections::BTreeSet;

use num::Zero;
use serde::{Deserialize, Serialize};

use super::roots::RootSystem;
use super::types::{CartanType, Family, SimpleType};
use super::RootError;
use crate::exactla::{q, QMatrix, Q};

/// Combinatorial data of a root subsystem (a Levi subsystem or any closed
/// subsystem given by its positive roots).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviData {
    /// Simple roots of the subsystem, in ambient simple-root coordinates.
    pub simple_roots: Vec<Vec<i64>>,
    pub component_types: Vec<SimpleType>,
    /// Exponents, sorted ascending (a multiset).
    pub exponents: Vec<u32>,
    pub coxeter_max: u32,
    pub cartan_det: i64,
    pub num_positive: usize,
}

impl LeviData {
    pub fn type_label(&self) -> String {
        CartanType(self.component_types.clone()).to_string()
    }
}

/// Levi data for the subsystem generated by a subset of the simple roots
/// (0-based indices).
pub fn levi_data(rs: &RootSystem, subset: &[usize]) -> Result<LeviData, RootError> {
    let l = rs.rank();
    if let Some(&bad) = subset.iter().find(|&&i| i >= l) {
        return Err(RootError::SimpleRootIndex(bad));
    }
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    let positive: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || set.contains(&i)))
        .cloned()
        .collect();
    Ok(subsystem_data(rs, &positive))
}

/// Data for the closed subsystem whose positive roots (with respect to the
/// ambient ordering) are `positive`. Its simple roots are the positive roots
/// that are not sums of two others.
pub fn subsystem_data(rs: &RootSystem, positive: &[Vec<i64>]) -> LeviData {
    let set: BTreeSet<&Vec<i64>> = positive.iter().collect();
    let simple: Vec<Vec<i64>> = positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|a| {
                let b: Vec<i64> = r.iter().zip(a).map(|(x, y)| x - y).collect();
                set.contains(&b)
            })
        })
        .cloned()
        .collect();
    let k = simple.len();
    let cartan: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            let ii = rs.inner(&simple[i], &simple[i]);
            (0..k).map(|j| 2 * rs.inner(&simple[i], &simple[j]) / ii).collect()
        })
        .collect();
    let cartan_det = if k == 0 {
        1
    } else {
        let rows: Vec<Vec<Q>> = cartan.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let det = QMatrix::from_row_vecs(k, &rows).determinant().expect("square");
        det.to_integer().try_into().expect("small determinant")
    };

    // Coordinates of each positive root in the subsystem's simple roots.
    let coords: Vec<Vec<Q>> = if k == 0 {
        Vec::new()
    } else {
        let cols: Vec<Vec<Q>> = simple.iter().map(|s| s.iter().map(|&x| q(x)).collect()).collect();
        let basis = QMatrix::from_columns(rs.rank(), &cols);
        positive
            .iter()
            .map(|r| {
                let b: Vec<Q> = r.iter().map(|&x| q(x)).collect();
                basis.solve_affine(&b).expect("root in span").particular
            })
            .collect()
    };

    // Connected components of the induced diagram.
    let mut comp = vec![usize::MAX; k];
    let mut ncomp = 0;
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = ncomp;
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if comp[j] == usize::MAX && cartan[i][j] != 0 {
                    comp[j] = ncomp;
                    stack.push(j);
                }
            }
        }
        ncomp += 1;
    }

    let mut component_types = Vec::new();
    let mut exponents = Vec::new();
    let mut coxeter_max = 1u32;
    for c in 0..ncomp {
        let members: Vec<usize> = (0..k).filter(|&i| comp[i] == c).collect();
        let roots: Vec<usize> = (0..positive.len())
            .filter(|&r| members.iter().any(|&i| !coords[r][i].is_zero()))
            .collect();
        let mut heights: Vec<usize> = roots
            .iter()
            .map(|&r| {
                let h: Q = coords[r].iter().sum();
                h.to_integer().try_into().expect("height")
            })
            .collect();
        heights.sort_unstable();
        let max_h = *heights.last().unwrap_or(&0);
        let count = |h: usize| heights.iter().filter(|&&x| x == h).count();
        let mut comp_exps = Vec::new();
        for h in 1..=max_h {
            for _ in 0..count(h) - count(h + 1) {
                comp_exps.push(h as u32);
            }
        }
        let top = comp_exps.iter().copied().max().unwrap_or(0);
        coxeter_max = coxeter_max.max(top + 1);
        exponents.extend(comp_exps);
        let long = roots
            .iter()
            .map(|&r| rs.inner(&positive[r], &positive[r]))
            .collect::<Vec<_>>();
        component_types.push(identify(members.len(), &long));
    }
    exponents.sort_unstable();
    component_types.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
    LeviData {
        simple_roots: simple,
        component_types,
        exponents,
        coxeter_max,
        cartan_det,
        num_positive: positive.len(),
    }
}

/// Simple type from rank, positive-root count and root lengths.
/// Rank-two systems with four positive roots are reported as `C2`.
fn identify(rank: usize, lengths: &[i64]) -> SimpleType {
    let count = lengths.len();
    let max = lengths.iter().copied().max().unwrap_or(0);
    let min = lengths.iter().copied().min().unwrap_or(0);
    let family = if rank == 1 {
        Family::A
    } else if max == min {
        if count == rank * (rank + 1) / 2 {
            Family::A
        } else if count == rank * (rank - 1) {
            Family::D
        } else {
            Family::E
        }
    } else if rank == 2 && count == 6 {
        Family::G
    } else if rank == 4 && count == 24 {
        Family::F
    } else if rank == 2 {
        Family::C
    } else {
        let long = lengths.iter().filter(|&&x| x == max).count();
        if long == rank {
            Family::C
        } else {
            Family::B
        }
    };
    SimpleType { family, rank }
}

/// `2(mu|nu)` where `nu` is the sum of the positive coroots of the Levi
/// subsystem on `subset`, and `mu` is a simple root outside it.
pub fn bound_d(rs: &RootSystem, subset: &[usize], mu: usize) -> Result<Q, RootError> {
    if subset.contains(&mu) {
        return Err(RootError::MuInsideLevi(mu));
    }
    if mu >= rs.rank() {
        return Err(RootError::SimpleRootIndex(mu));
    }
    if let Some(&bad) = subset.iter().find(|&&i| i >= rs.rank()) {
        return Err(RootError::SimpleRootIndex(bad));
    }
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    let mut mu_v = vec![0i64; rs.rank()];
    mu_v[mu] = 1;
    let mut total = Q::zero();
    for r in rs.positive_roots() {
        if r.iter().enumerate().all(|(i, &c)| c == 0 || set.contains(&i)) {
            // 2(mu | beta^vee) = 4(mu, beta)/(beta, beta)
            total += Q::new((4 * rs.inner(&mu_v, r)).into(), rs.inner(r, r).into());
        }
    }
    Ok(total)
}

/// Minimum of [`bound_d`] over all simple roots outside the subset.
pub fn min_bound_d(rs: &RootSystem, subset: &[usize]) -> Result<Option<Q>, RootError> {
    let mut best: Option<Q> = None;
    for mu in (0..rs.rank()).filter(|m| !subset.contains(m)) {
        let d = bound_d(rs, subset, mu)?;
        best = Some(match best {
            Some(b) if b <= d => b,
            _ => d,
        });
    }
    Ok(best)
}
