use std::collections::HashMap;

use num::Integer;

use super::types::{CartanType, Family, SimpleType};
use super::RootError;
use crate::exactla::{q, QMatrix, Q};

/// Root data for a (semi)simple type in the simple-root basis.
///
/// The inner product is normalized so that short roots have squared length 2.
/// `cartan[i][j] = <alpha_j, alpha_i^vee>`, i.e. the value of the simple root
/// `alpha_j` on the simple coroot `h_i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem, RootError> {
    Ok(RootSystem::new(CartanType::simple(family, rank)?))
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> RootSystem {
        let l = ctype.rank();
        let mut gram = vec![vec![0i64; l]; l];
        let mut offset = 0;
        for comp in ctype.components() {
            let lengths = comp.lengths();
            for (i, len) in lengths.iter().enumerate() {
                gram[offset + i][offset + i] = *len;
            }
            for (a, b) in comp.edges() {
                let v = -lengths[a].max(lengths[b]) / 2;
                gram[offset + a][offset + b] = v;
                gram[offset + b][offset + a] = v;
            }
            offset += comp.rank;
        }
        let cartan: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let positive = enumerate_positive(&cartan);
        let index = positive.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        RootSystem {
            ctype,
            cartan,
            gram,
            positive,
            index,
        }
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ctype
    }

    pub fn simple_type(&self) -> Option<SimpleType> {
        match self.ctype.components() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> QMatrix {
        let rows: Vec<Vec<Q>> = self.cartan.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        QMatrix::from_row_vecs(self.rank(), &rows)
    }

    /// Gram matrix `(alpha_i, alpha_j)` of the simple roots.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Positive roots, sorted by height and then by decreasing coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                s += x * y * self.gram[i][j];
            }
        }
        s
    }

    /// `<beta, alpha_i^vee>`: the value of `beta` on the simple coroot `h_i`.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan[i]).map(|(c, a)| c * a).sum()
    }

    /// Coordinates of the coroot `beta^vee` in the basis of simple coroots.
    pub fn coroot_coords(&self, beta: &[i64]) -> Vec<i64> {
        let bb = self.inner(beta, beta);
        beta.iter()
            .enumerate()
            .map(|(j, c)| {
                let num = c * self.gram[j][j];
                debug_assert!(num.is_multiple_of(&bb));
                num / bb
            })
            .collect()
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// The highest root of a simple system (last in the sorted order).
    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("root system is empty")
    }
}

fn enumerate_positive(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..l {
                // alpha_i-string through beta: p - q = <beta, alpha_i^vee>.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = beta.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| RootSystem::height(a).cmp(&RootSystem::height(b)).then_with(|| b.cmp(a)));
    all
}

/// Human-readable root such as `a1+2a2`, or `-a1-a2` for negative roots.
pub fn root_label(root: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in root.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("a{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_root_counts() {
        for (f, n, count) in [
            (Family::A, 1, 1),
            (Family::A, 4, 10),
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
            (Family::F, 4, 24),
            (Family::G, 2, 6),
        ] {
            let rs = build_root_system(f, n).unwrap();
            assert_eq!(rs.num_positive(), count, "{f:?}{n}");
        }
    }

    #[test]
    fn bourbaki_cartan_entries() {
        let b3 = build_root_system(Family::B, 3).unwrap();
        assert_eq!(b3.cartan()[1][2], -1);
        assert_eq!(b3.cartan()[2][1], -2);
        let g2 = build_root_system(Family::G, 2).unwrap();
        assert_eq!(g2.cartan()[0][1], -3);
        assert_eq!(g2.cartan()[1][0], -1);
        assert_eq!(g2.highest_root(), &[3, 2]);
        let e6 = build_root_system(Family::E, 6).unwrap();
        assert_eq!(e6.highest_root(), &[1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(build_root_system(Family::E, 5).is_err());
        assert!(build_root_system(Family::D, 2).is_err());
        assert!(build_root_system(Family::B, 1).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(root_label(&[1, 2, 0]), "a1+2a2");
        assert_eq!(root_label(&[0, -1, -1]), "-a2-a3");
    }
}
