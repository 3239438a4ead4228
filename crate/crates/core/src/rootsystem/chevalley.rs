//! Chevalley-basis structure constants via extraspecial pairs.

use std::collections::HashMap;

use num::Zero;

use super::algebra::LieAlgebra;
use super::roots::RootSystem;
use crate::exactla::{q, Q};

struct Constants<'a> {
    rs: &'a RootSystem,
    /// `N_{r,s}` for special pairs `r < s` of positive roots (by index).
    special: HashMap<(usize, usize), i64>,
}

impl Constants<'_> {
    fn len2(&self, v: &[i64]) -> i64 {
        self.rs.inner(v, v)
    }

    fn neg(v: &[i64]) -> Vec<i64> {
        v.iter().map(|x| -x).collect()
    }

    fn is_positive(v: &[i64]) -> bool {
        v.iter().any(|&x| x > 0)
    }

    /// `N_{a,b}` for arbitrary roots `a, b`; zero when `a + b` is not a root.
    fn n(&self, a: &[i64], b: &[i64]) -> i64 {
        let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        if !self.rs.is_root(&sum) {
            return 0;
        }
        match (Self::is_positive(a), Self::is_positive(b)) {
            (true, true) => {
                let ia = self.rs.positive_index(a).unwrap();
                let ib = self.rs.positive_index(b).unwrap();
                if ia < ib {
                    self.special[&(ia, ib)]
                } else {
                    -self.special[&(ib, ia)]
                }
            }
            (false, false) => -self.n(&Self::neg(a), &Self::neg(b)),
            _ => {
                // a + b + c = 0 gives N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
                let c = Self::neg(&sum);
                let (pa, pb, pc) = (Self::is_positive(a), Self::is_positive(b), Self::is_positive(&c));
                if pb == pc {
                    self.n(b, &c) * self.len2(&c) / self.len2(a)
                } else {
                    debug_assert_eq!(pc, pa);
                    self.n(&c, a) * self.len2(&c) / self.len2(b)
                }
            }
        }
    }
}

fn structure_constants(rs: &RootSystem) -> HashMap<(usize, usize), i64> {
    let pos = rs.positive_roots();
    let mut c = Constants {
        rs,
        special: HashMap::new(),
    };
    // Roots are sorted by height, so every constant needed on the right-hand
    // side belongs to a root processed earlier.
    for (xi_idx, xi) in pos.iter().enumerate() {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (r_idx, r) in pos[..xi_idx].iter().enumerate() {
            let s: Vec<i64> = xi.iter().zip(r).map(|(x, y)| x - y).collect();
            if let Some(s_idx) = rs.positive_index(&s) {
                if r_idx < s_idx {
                    pairs.push((r_idx, s_idx));
                }
            }
        }
        let Some(&(a_idx, b_idx)) = pairs.first() else {
            continue;
        };
        let alpha = pos[a_idx].clone();
        let beta = pos[b_idx].clone();
        let mut p = 0;
        loop {
            let v: Vec<i64> = beta.iter().zip(&alpha).map(|(b, a)| b - (p + 1) * a).collect();
            if rs.is_root(&v) {
                p += 1;
            } else {
                break;
            }
        }
        let n_ab = p + 1;
        c.special.insert((a_idx, b_idx), n_ab);
        let xi2 = c.len2(xi);
        let ma = Constants::neg(&alpha);
        let mb = Constants::neg(&beta);
        for &(r_idx, s_idx) in &pairs[1..] {
            let r = &pos[r_idx];
            let s = &pos[s_idx];
            let s_a: Vec<i64> = s.iter().zip(&alpha).map(|(x, y)| x - y).collect();
            let r_a: Vec<i64> = r.iter().zip(&alpha).map(|(x, y)| x - y).collect();
            let mut total = Q::zero();
            if rs.is_root(&s_a) {
                total += Q::new((c.n(s, &ma) * c.n(r, &mb)).into(), c.len2(&s_a).into());
            }
            if rs.is_root(&r_a) {
                total += Q::new((c.n(&ma, r) * c.n(s, &mb)).into(), c.len2(&r_a).into());
            }
            let value = total * q(xi2) / q(n_ab);
            assert!(value.is_integer(), "non-integral structure constant");
            let value: i64 = value.to_integer().try_into().expect("small constant");
            c.special.insert((r_idx, s_idx), value);
        }
    }
    c.special
}

/// The Chevalley-basis algebra of a root system. `[e_r, e_{-r}] = h_r`
/// (the coroot), `[h_i, e_r] = <r, alpha_i^vee> e_r`, and
/// `[e_r, e_s] = N_{r,s} e_{r+s}` with `N = +(p+1)` on extraspecial pairs.
pub fn chevalley_algebra(rs: &RootSystem) -> LieAlgebra {
    let special = structure_constants(rs);
    let consts = Constants { rs, special };
    let l = rs.rank();
    let p = rs.num_positive();
    let dim = l + 2 * p;
    let pos = rs.positive_roots();
    let weight = |i: usize| -> Option<Vec<i64>> {
        if i < l {
            None
        } else if i < l + p {
            Some(pos[i - l].clone())
        } else {
            Some(Constants::neg(&pos[i - l - p]))
        }
    };
    let index_of = |root: &[i64]| -> usize {
        if let Some(k) = rs.positive_index(root) {
            l + k
        } else {
            l + p + rs.positive_index(&Constants::neg(root)).expect("root")
        }
    };
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let entry: Vec<(usize, Q)> = match (weight(i), weight(j)) {
                (None, None) => Vec::new(),
                (None, Some(r)) => {
                    let v = rs.pairing(&r, i);
                    if v == 0 {
                        Vec::new()
                    } else {
                        vec![(j, q(v))]
                    }
                }
                (Some(r), None) => {
                    let v = rs.pairing(&r, j);
                    if v == 0 {
                        Vec::new()
                    } else {
                        vec![(i, q(-v))]
                    }
                }
                (Some(r), Some(s)) => {
                    let sum: Vec<i64> = r.iter().zip(&s).map(|(a, b)| a + b).collect();
                    if sum.iter().all(|&x| x == 0) {
                        let sign = if Constants::is_positive(&r) { 1 } else { -1 };
                        let base = if sign > 0 { r.clone() } else { s.clone() };
                        rs.coroot_coords(&base)
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| *c != 0)
                            .map(|(k, c)| (k, q(sign * c)))
                            .collect()
                    } else if rs.is_root(&sum) {
                        vec![(index_of(&sum), q(consts.n(&r, &s)))]
                    } else {
                        Vec::new()
                    }
                }
            };
            table[i * dim + j] = entry;
        }
    }
    LieAlgebra::from_table(rs.cartan_type().to_string(), rs.clone(), table, None)
}
