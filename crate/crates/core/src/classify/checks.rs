//! The invariant battery run over every analyzed pair.

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    almost_even_structure, denominator_check, exponents_check, pusto3_check, richardson_check, xarak_check, Analysis,
    ClassificationReport,
};
use crate::exactla::{Subspace, Q};
use crate::grading::{AxisFilter, Cell, Descriptor, LimitMode};
use crate::pairs::{is_even_nilpotent, verify_characteristic};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

struct Battery(Vec<CheckOutcome>);

impl Battery {
    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckOutcome {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

fn zero_axis() -> AxisFilter {
    AxisFilter::Exactly(Q::zero())
}

/// Every applicable check, in a fixed order. `seed` drives the random
/// subspaces used for the dimension-preservation checks.
pub fn property_checks(a: &Analysis, report: &ClassificationReport, seed: u64) -> Vec<CheckOutcome> {
    let mut b = Battery(Vec::new());
    let alg = a.alg;
    let dim = a.dim();

    let v = verify_characteristic(alg, &a.pair, &a.ch.h1, &a.ch.h2);
    let failing = v
        .first_failure()
        .map(|c| format!("{} fails", c.name()))
        .unwrap_or_default();
    b.push("characteristic", v.passed(), failing);

    let total: usize = a.grading.cells().values().map(Subspace::dim).sum();
    let mut ok = total == dim && a.hh == a.z_of(false, false, true, true).space;
    if !a.pair.is_trivial() {
        ok &= [Cell::int(0, 0), Cell::int(1, 0), Cell::int(0, 1)]
            .iter()
            .all(|c| a.grading.dim_at(c) > 0);
    }
    b.push("grading-direct-sum", ok, format!("total {total}"));
    b.push("grading-brackets", brackets_compatible(a), "");

    let perp = a.z_e.space.orth_complement(alg.killing()).expect("dims");
    let images = a
        .bracket_with(&Subspace::full(dim), 1)
        .sum(&a.bracket_with(&Subspace::full(dim), 2))
        .expect("dims");
    b.push("killing-duality", perp == images, "");

    let meet = a.hh.intersect(&a.z_e.space).expect("dims");
    if meet.is_zero() {
        let orth = a
            .z_e
            .space
            .basis_vectors()
            .iter()
            .all(|z| alg.killing_form(&a.ch.h1, z).is_zero() && alg.killing_form(&a.ch.h2, z).is_zero());
        b.push("orthogonality-corollary", orth, "");
    }

    b.push("lemma-int", report.integrality.agrees(), "");
    b.push(
        "report-implications",
        report.violations.is_empty(),
        report.violations.join("; "),
    );
    let rect = &report.rectangularity;
    b.push(
        "rectan-equivalence",
        rect.h1_in_image_e1 == rect.h2_in_image_e2,
        format!("{} vs {}", rect.h1_in_image_e1, rect.h2_in_image_e2),
    );

    ravno(a, seed, &mut b);

    let l1 = a.lim_h(LimitMode::E1);
    let l2 = a.lim_h(LimitMode::E2);
    let l12 = a.lim_h(LimitMode::Both);
    let sovpad = a.limit(&l2, LimitMode::E1) == l12 && a.limit(&l1, LimitMode::E2) == l12;
    b.push("sovpad", sovpad, "");

    let z1h2 = a.z_of(true, false, false, true).restrict(Descriptor::naturals()).space;
    let z2h1 = a.z_of(false, true, true, false).restrict(Descriptor::naturals()).space;
    let zpp = a.z_e.restrict(Descriptor::naturals()).space;
    let inclu = z1h2.contains_subspace(&l1) && z2h1.contains_subspace(&l2) && zpp.contains_subspace(&l12);
    b.push("inclu", inclu, "");

    b.push("dimension-identity", dimension_identity(a), "");

    if report.even {
        b.push("theorem-even", report.wonderful && report.integral, "");
    }
    if report.rectangular {
        b.push("rectangular-wonderful", report.wonderful, "");
        match (is_even_nilpotent(alg, &a.pair.e1), is_even_nilpotent(alg, &a.pair.e2)) {
            (Ok(x), Ok(y)) => b.push("pr-even", report.even == (x && y), format!("e1 {x}, e2 {y}")),
            (Err(e), _) | (_, Err(e)) => b.push("pr-even", false, e.to_string()),
        }
    }
    if report.integral {
        match xarak_check(a) {
            Ok((l, r)) => b.push("xarak", l == r && l == report.wonderful, format!("lhs {l}, rhs {r}")),
            Err(e) => b.push("xarak", false, e.to_string()),
        }
    }
    if report.wonderful {
        wond1(a, &l1, &l2, &z1h2, &z2h1, &mut b);
        wond2(a, &l1, &l2, &mut b);
        useful(a, &mut b);
    }
    if report.wonderful && report.integral {
        b.push("pusto3", pusto3_check(a, report).unwrap_or(false), "");
        let r1 = richardson_check(a, 1);
        let r2 = richardson_check(a, 2);
        b.push(
            "richardson-levi",
            r1.levi && r2.levi,
            format!("e1 {}, e2 {}", r1.levi, r2.levi),
        );
    }
    if report.almost_even {
        match almost_even_structure(a, report) {
            Ok(s) => b.push(
                "almost-even",
                s.permitted && s.fractional_consequences.unwrap_or(true),
                format!("x in {}", s.cell),
            ),
            Err(e) => b.push("almost-even", false, e.to_string()),
        }
    }
    if let Ok(d) = denominator_check(a) {
        b.push(
            "denominators",
            d.divides,
            format!("max {} | c({}) = {}", d.max_denominator, d.s_type, d.c_s),
        );
    }
    if report.principal || report.almost_principal {
        if let Ok(x) = exponents_check(a, report) {
            b.push("exponents", x.passed(), format!("{} / {}", x.levi_l2, x.levi_l1));
        }
    }
    b.0
}

/// `[g_{p,q}, g_{p',q'}] ⊆ g_{p+p',q+q'}` on cell basis vectors.
fn brackets_compatible(a: &Analysis) -> bool {
    let cells: Vec<(&Cell, Vec<Vec<Q>>)> = a.grading.cells().iter().map(|(c, s)| (c, s.basis_vectors())).collect();
    for (i, (c1, b1)) in cells.iter().enumerate() {
        for (c2, b2) in &cells[i..] {
            let target = c1.add(c2);
            for x in b1 {
                for y in b2 {
                    let z = a.alg.bracket(x, y);
                    if z.is_zero() {
                        continue;
                    }
                    let ok1 = a.alg.bracket(&a.ch.h1, &z) == z.scale(&target.p);
                    let ok2 = a.alg.bracket(&a.ch.h2, &z) == z.scale(&target.q);
                    if !(ok1 && ok2) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn ravno(a: &Analysis, seed: u64, b: &mut Battery) {
    let hh = &a.hh;
    let l1 = a.grading.part(&Descriptor::new(zero_axis(), AxisFilter::Any));
    let l2 = a.grading.part(&Descriptor::new(AxisFilter::Any, zero_axis()));
    let mut bad = Vec::new();
    for (name, m, mode) in [
        ("lim_e1 h", hh.clone(), LimitMode::E1),
        ("lim_e2 h", hh.clone(), LimitMode::E2),
        ("lim_e h", hh.clone(), LimitMode::Both),
        ("lim_e1 l1", l1, LimitMode::E1),
        ("lim_e2 l2", l2, LimitMode::E2),
    ] {
        let d = a.limit(&m, mode).dim();
        if d != m.dim() {
            bad.push(format!("{name}: {d} vs {}", m.dim()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = hh.basis_vectors();
    for trial in 0..3 {
        if basis.is_empty() {
            break;
        }
        let k = rng.gen_range(1..=basis.len());
        let vecs: Vec<Vec<Q>> = (0..k)
            .map(|_| {
                let mut v = vec![Q::zero(); a.dim()];
                for w in &basis {
                    let c = Q::from_integer(rng.gen_range(-3i64..=3).into());
                    for (vi, wi) in v.iter_mut().zip(w) {
                        *vi += &c * wi;
                    }
                }
                v
            })
            .collect();
        let m = Subspace::span_of(a.dim(), &vecs);
        for mode in [LimitMode::E1, LimitMode::E2] {
            let d = a.limit(&m, mode).dim();
            if d != m.dim() {
                bad.push(format!("random #{trial} {mode:?}: {d} vs {}", m.dim()));
            }
        }
    }
    b.push("ravno", bad.is_empty(), bad.join("; "));
}

fn dimension_identity(a: &Analysis) -> bool {
    let f = &a.filtration;
    let d = |i: i64, j: i64| f.part(&a.hh, Some(i), Some(j)).dim() as i64;
    for i in 0..f.index(1) {
        for j in 0..f.index(2) {
            let (ii, jj) = (i as i64, j as i64);
            let rhs = d(ii, jj) - d(ii - 1, jj) - d(ii, jj - 1) + d(ii - 1, jj - 1);
            if f.graded_piece(&a.hh, i, j).dim() as i64 != rhs {
                return false;
            }
        }
    }
    true
}

fn wond1(a: &Analysis, l1: &Subspace, l2: &Subspace, z1h2: &Subspace, z2h1: &Subspace, b: &mut Battery) {
    let part1 = l1 == z1h2 && l2 == z2h1;
    let z2 = a.z_of(false, true, true, true).space;
    let z1 = a.z_of(true, false, true, true).space;
    let rhs2 = a.z_of(true, true, false, true).restrict(Descriptor::naturals()).space;
    let rhs1 = a.z_of(true, true, true, false).restrict(Descriptor::naturals()).space;
    let part2 = a.limit(&z2, LimitMode::E1) == rhs2 && a.limit(&z1, LimitMode::E2) == rhs1;
    b.push("wond1", part1 && part2, format!("(1) {part1}, (2) {part2}"));
}

/// Largest integral `p` (side 1) or `q` (side 2) in the support.
fn max_index(a: &Analysis, side: usize) -> i64 {
    a.grading
        .support()
        .iter()
        .filter(|c| c.is_integral())
        .map(|c| if side == 1 { c.p.to_integer() } else { c.q.to_integer() })
        .max()
        .and_then(|v| i64::try_from(v).ok())
        .unwrap_or(0)
}

fn axis_cell(side: usize, i: i64) -> Descriptor {
    let at = AxisFilter::Exactly(Q::from_integer(i.into()));
    if side == 1 {
        Descriptor::new(at, zero_axis())
    } else {
        Descriptor::new(zero_axis(), at)
    }
}

/// `[A_i, e_side] = A_{i+1}` for `i ∈ ℙ`, with `A_i = S ∩ (axis cell i)`.
fn surjective_along(a: &Analysis, s: &Subspace, side: usize) -> bool {
    let graded = a.grading.graded(s).expect("graded");
    (0..=max_index(a, side)).all(|i| {
        let ai = graded.restrict(axis_cell(side, i)).space;
        let next = graded.restrict(axis_cell(side, i + 1)).space;
        a.bracket_with(&ai, side) == next
    })
}

fn wond2(a: &Analysis, l1: &Subspace, l2: &Subspace, b: &mut Battery) {
    let full = Subspace::full(a.dim());
    let int_nat = |side: usize, z: &crate::grading::GradedSlice| {
        let (ints, nats) = if side == 1 {
            (
                Descriptor::new(AxisFilter::Integers, AxisFilter::Any),
                Descriptor::new(AxisFilter::Naturals, AxisFilter::Any),
            )
        } else {
            (
                Descriptor::new(AxisFilter::Any, AxisFilter::Integers),
                Descriptor::new(AxisFilter::Any, AxisFilter::Naturals),
            )
        };
        (z.restrict(ints).space, z.restrict(nats).space)
    };
    let (z1i, z1n) = int_nat(1, &a.z_of(true, false, false, true));
    let (z2i, z2n) = int_nat(2, &a.z_of(false, true, true, false));
    let limits = *l1 == z1i && z1i == z1n && *l2 == z2i && z2i == z2n;
    let axes = surjective_along(a, &full, 1) && surjective_along(a, &full, 2);
    let z22 = a.z_of(false, true, false, true).space;
    let z11 = a.z_of(true, false, true, false).space;
    let inner = surjective_along(a, &z22, 1) && surjective_along(a, &z11, 2);
    b.push(
        "wond2",
        limits && axes && inner,
        format!("limits {limits}, axes {axes}, centralizers {inner}"),
    );
}

/// The graded-surjectivity lemma on `(𝔩2)_ℤ` with `e1` and `(𝔩1)_ℤ` with `e2`.
fn useful(a: &Analysis, b: &mut Battery) {
    let mut ok = true;
    let mut applied = 0;
    for side in [1usize, 2] {
        let (nat, int, levi) = if side == 1 {
            (
                Descriptor::new(AxisFilter::Naturals, zero_axis()),
                Descriptor::new(AxisFilter::Integers, zero_axis()),
                Descriptor::new(AxisFilter::Integers, zero_axis()),
            )
        } else {
            (
                Descriptor::new(zero_axis(), AxisFilter::Naturals),
                Descriptor::new(zero_axis(), AxisFilter::Integers),
                Descriptor::new(zero_axis(), AxisFilter::Integers),
            )
        };
        let z = a.z_of(side == 1, side == 2, false, false);
        let z_nat = z.restrict(nat).space;
        if z_nat.dim() != a.hh.dim() {
            continue;
        }
        applied += 1;
        let mode = if side == 1 { LimitMode::E1 } else { LimitMode::E2 };
        ok &= a.lim_h(mode) == z_nat;
        ok &= surjective_along(a, &a.grading.part(&levi), side);
        ok &= z.restrict(int).space == z_nat;
    }
    b.push("useful", ok, format!("applied on {applied} side(s)"));
}
