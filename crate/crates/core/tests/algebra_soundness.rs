use nilpairs::exactla::{q, Q};
use nilpairs::rootsystem::{
    bound_d, build_root_system, chevalley_algebra, classical_algebra, levi_data, CartanType, Family, LieAlgebra,
    RootSystem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_types() -> Vec<(Family, usize)> {
    vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 3),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
    ]
}

fn all_constructions(f: Family, n: usize) -> Vec<LieAlgebra> {
    let rs = build_root_system(f, n).unwrap();
    let mut out = vec![chevalley_algebra(&rs)];
    if f.is_classical() {
        out.push(classical_algebra(f, n).unwrap());
    }
    out
}

fn basis(alg: &LieAlgebra, i: usize) -> Vec<Q> {
    alg.basis_element(i).into_coords()
}

fn jacobi_and_invariance(alg: &LieAlgebra, i: usize, j: usize, k: usize) {
    let (x, y, z) = (basis(alg, i), basis(alg, j), basis(alg, k));
    let a = alg.bracket(&x, &alg.bracket(&y, &z));
    let b = alg.bracket(&y, &alg.bracket(&z, &x));
    let c = alg.bracket(&z, &alg.bracket(&x, &y));
    let sum: Vec<Q> = (0..alg.dim()).map(|t| &a[t] + &b[t] + &c[t]).collect();
    assert!(
        sum.iter().all(|v| *v == q(0)),
        "Jacobi fails in {} on ({i},{j},{k})",
        alg.name()
    );
    let lhs = alg.killing_form(&alg.bracket(&x, &y), &z);
    let rhs = alg.killing_form(&x, &alg.bracket(&y, &z));
    assert_eq!(lhs, rhs, "Killing invariance fails in {} on ({i},{j},{k})", alg.name());
}

#[test]
fn root_counts_match_the_classical_table() {
    let table = [
        ("A1", 1),
        ("A2", 3),
        ("A5", 15),
        ("B2", 4),
        ("B5", 25),
        ("C3", 9),
        ("C6", 36),
        ("D4", 12),
        ("D6", 30),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
        ("F4", 24),
        ("G2", 6),
    ];
    for (name, count) in table {
        let ct: CartanType = name.parse().unwrap();
        assert_eq!(RootSystem::new(ct).num_positive(), count, "{name}");
    }
    let ss = RootSystem::new("A4+A1".parse().unwrap());
    assert_eq!(ss.num_positive(), 11);
}

#[test]
fn roots_are_closed_under_simple_reflections() {
    for (f, n) in small_types().into_iter().chain([(Family::E, 6), (Family::E, 7)]) {
        let rs = build_root_system(f, n).unwrap();
        for r in rs.positive_roots() {
            for i in 0..n {
                let mut s = r.clone();
                s[i] -= rs.pairing(r, i);
                assert!(rs.is_root(&s), "{f:?}{n}: s_{i} of {r:?}");
            }
        }
    }
}

#[test]
fn exhaustive_soundness_up_to_rank_four() {
    for (f, n) in small_types() {
        for alg in all_constructions(f, n) {
            let d = alg.dim();
            assert_eq!(d, n + 2 * build_root_system(f, n).unwrap().num_positive());
            for i in 0..d {
                for j in 0..d {
                    for (_, c) in alg.bracket_basis(i, j) {
                        assert!(c.is_integer(), "non-integral constant in {}", alg.name());
                    }
                    let ij = alg.bracket(&basis(&alg, i), &basis(&alg, j));
                    let ji = alg.bracket(&basis(&alg, j), &basis(&alg, i));
                    assert_eq!(ij, -&ji, "antisymmetry in {}", alg.name());
                }
            }
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        jacobi_and_invariance(&alg, i, j, k);
                    }
                }
            }
            assert_ne!(alg.killing().determinant().unwrap(), q(0), "{}", alg.name());
        }
    }
}

#[test]
fn sampled_soundness_for_e6_and_e7() {
    for n in [6, 7] {
        let alg = chevalley_algebra(&build_root_system(Family::E, n).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let d = alg.dim();
        for _ in 0..10_000 {
            let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            jacobi_and_invariance(&alg, i, j, k);
        }
        assert_ne!(alg.killing().rank(), 0);
        assert_eq!(alg.killing().rank(), d, "E{n} Killing form degenerate");
    }
}

#[test]
fn sl2_defining_relations() {
    for alg in all_constructions(Family::A, 1) {
        let (h, e, f) = (basis(&alg, 0), basis(&alg, 1), basis(&alg, 2));
        assert_eq!(alg.bracket(&h, &e).into_coords(), vec![q(0), q(2), q(0)]);
        assert_eq!(alg.bracket(&h, &f).into_coords(), vec![q(0), q(0), q(-2)]);
        assert_eq!(alg.bracket(&e, &f).into_coords(), h);
    }
}

#[test]
fn killing_pairs_opposite_root_spaces_in_a2() {
    for alg in all_constructions(Family::A, 2) {
        let rs = alg.root_system().clone();
        for r in rs.positive_roots() {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            let er = basis(&alg, alg.root_vector_index(r).unwrap());
            for k in 0..alg.dim() {
                let w = alg.weight(k);
                let value = alg.killing_form(&er, &basis(&alg, k));
                if w == neg {
                    assert_ne!(value, q(0));
                } else {
                    assert_eq!(value, q(0));
                }
            }
        }
    }
}

#[test]
fn labels_round_trip_and_are_linear() {
    let alg = chevalley_algebra(&build_root_system(Family::E, 6).unwrap());
    let a: Vec<Q> = [0, 0, 0, 0, 0, 1].iter().map(|&x| q(x)).collect();
    let b: Vec<Q> = [1, 1, 1, 1, 1, -7].iter().map(|&x| q(x)).collect();
    let ha = alg.element_from_labels(&a).unwrap();
    let hb = alg.element_from_labels(&b).unwrap();
    assert_eq!(alg.labels_of(&ha).unwrap(), a);
    assert_eq!(alg.labels_of(&hb).unwrap(), b);
    let sum: Vec<Q> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
    assert_eq!(alg.element_from_labels(&sum).unwrap(), &ha + &hb);
    assert!(alg.element_from_labels(&vec![q(0); 6]).unwrap().is_zero());
    let sl2 = classical_algebra(Family::A, 1).unwrap();
    assert_eq!(
        sl2.element_from_labels(&[q(2)]).unwrap().into_coords(),
        vec![q(1), q(0), q(0)]
    );
}

#[test]
fn levi_data_examples() {
    let e6 = build_root_system(Family::E, 6).unwrap();
    let empty = levi_data(&e6, &[]).unwrap();
    assert!(empty.exponents.is_empty());
    assert_eq!((empty.coxeter_max, empty.cartan_det), (1, 1));
    let d5 = levi_data(&e6, &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(d5.type_label(), "D5");
    assert_eq!(d5.exponents, vec![1, 3, 4, 5, 7]);
    assert_eq!(d5.coxeter_max, 8);
    assert_eq!(d5.cartan_det, 4);
    let a3 = levi_data(&build_root_system(Family::A, 3).unwrap(), &[0, 1, 2]).unwrap();
    assert_eq!(a3.exponents, vec![1, 2, 3]);
    assert_eq!((a3.coxeter_max, a3.cartan_det), (4, 4));
    let e7 = build_root_system(Family::E, 7).unwrap();
    let a4a1 = levi_data(&e7, &[0, 1, 2, 3, 6]).unwrap();
    assert_eq!(a4a1.type_label(), "A4+A1");
    assert_eq!(a4a1.exponents, vec![1, 1, 2, 3, 4]);
    for (f, n) in small_types() {
        let rs = build_root_system(f, n).unwrap();
        let all: Vec<usize> = (0..n).collect();
        let data = levi_data(&rs, &all).unwrap();
        assert_eq!(data.component_types.len(), 1);
        let t = data.component_types[0];
        assert_eq!(t.rank, n);
        let sum: u32 = data.exponents.iter().sum();
        assert_eq!(sum as usize, rs.num_positive());
        assert_eq!(data.coxeter_max as usize, t.coxeter_number());
    }
}

#[test]
fn bound_d_examples() {
    let a2 = build_root_system(Family::A, 2).unwrap();
    assert_eq!(bound_d(&a2, &[], 1).unwrap(), q(0));
    assert_eq!(bound_d(&a2, &[0], 1).unwrap(), q(-2));
    assert!(bound_d(&a2, &[0], 0).is_err());
    let e6 = build_root_system(Family::E, 6).unwrap();
    let d = bound_d(&e6, &[0, 1, 2, 3, 4], 5).unwrap();
    assert!(q(-7) >= d);
}
