use nilpairs::exactla::{joint_eigenspaces, q, QMatrix, Subspace, Q};
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |xs| {
        let data: Vec<Vec<Q>> = xs.chunks(cols).map(|c| c.iter().map(|&x| q(x)).collect()).collect();
        QMatrix::from_row_vecs(cols, &data)
    })
}

fn vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vec<Q>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=k)
        .prop_map(|vs| vs.into_iter().map(|v| v.into_iter().map(q).collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(4, 5)) {
        let (r, p) = m.rref();
        let (rr, pp) = r.rref();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(p, pp);
    }

    #[test]
    fn rank_nullity(m in small_matrix(4, 6)) {
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.dim(), 6);
        for v in ker.basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn affine_solutions_satisfy_the_system(m in small_matrix(3, 4), x in prop::collection::vec(-3i64..=3, 4)) {
        let x: Vec<Q> = x.into_iter().map(q).collect();
        let b = m.apply(&x);
        let sol = m.solve_affine(&b).unwrap();
        prop_assert_eq!(m.apply(&sol.particular), b);
    }

    #[test]
    fn modular_law(a in vectors(4, 3), b in vectors(4, 3), c in vectors(4, 3)) {
        let (u, v, w) = (Subspace::from_vectors(4, a), Subspace::from_vectors(4, b), Subspace::from_vectors(4, c));
        let uv = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(uv.dim() + i.dim(), u.dim() + v.dim());
        for x in i.basis_vectors() {
            prop_assert!(u.contains(&x) && v.contains(&x));
        }
        // u ⊆ w implies u + (v ∩ w) = (u + v) ∩ w
        let uw = u.sum(&w).unwrap();
        let lhs = u.sum(&v.intersect(&uw).unwrap()).unwrap();
        let rhs = uv.intersect(&uw).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn joint_eigenspaces_form_a_direct_sum(
        d1 in prop::collection::vec(-2i64..=2, 4),
        d2 in prop::collection::vec(-2i64..=2, 4),
        p in small_matrix(4, 4),
    ) {
        prop_assume!(p.determinant().unwrap() != q(0));
        let pinv = p.inverse().unwrap();
        let conj = |d: &[i64]| {
            let diag = QMatrix::diagonal(&d.iter().map(|&x| q(x)).collect::<Vec<_>>());
            p.mul(&diag).unwrap().mul(&pinv).unwrap()
        };
        let ops = [conj(&d1), conj(&d2)];
        let parts = joint_eigenspaces(4, &ops).unwrap();
        let total: usize = parts.iter().map(|e| e.space.dim()).sum();
        prop_assert_eq!(total, 4);
        let all = Subspace::sum_all(4, parts.iter().map(|e| &e.space));
        prop_assert!(all.is_full());
        for part in &parts {
            for v in part.space.basis_vectors() {
                for (op, lam) in ops.iter().zip(&part.eigenvalues) {
                    prop_assert!(op.shift(lam).apply(&v).iter().all(|x| *x == q(0)));
                }
            }
        }
    }
}
