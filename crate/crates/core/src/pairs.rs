//! Nilpotent pairs, characteristics, rectangularity and sl2-completion.

use num::Zero;
use thiserror::Error;

use crate::exactla::{joint_eigenspaces, minpoly_is_squarefree, ExactError, QMatrix, Subspace, Q};
use crate::rootsystem::{Element, LieAlgebra, RootError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("the element is zero")]
    ZeroElement,
    #[error("the elements do not commute")]
    NotCommuting,
    #[error("{0} is not ad-nilpotent")]
    NotNilpotent(&'static str),
    #[error("no characteristic found at stage {stage}: {reason}")]
    NoSolution { stage: &'static str, reason: String },
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Commuting pair `(e1, e2)`; nilpotency is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentPair {
    pub e1: Element,
    pub e2: Element,
}

impl NilpotentPair {
    pub fn new(alg: &LieAlgebra, e1: Element, e2: Element) -> Result<Self, PairError> {
        if !alg.bracket(&e1, &e2).is_zero() {
            return Err(PairError::NotCommuting);
        }
        if !is_ad_nilpotent(alg, &e1) {
            return Err(PairError::NotNilpotent("e1"));
        }
        if !is_ad_nilpotent(alg, &e2) {
            return Err(PairError::NotNilpotent("e2"));
        }
        Ok(NilpotentPair { e1, e2 })
    }

    pub fn is_trivial(&self) -> bool {
        self.e1.is_zero() || self.e2.is_zero()
    }

    pub fn get(&self, i: usize) -> &Element {
        if i == 1 {
            &self.e1
        } else {
            &self.e2
        }
    }
}

/// Characteristic `(h1, h2)` of a nilpotent pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characteristic {
    pub h1: Element,
    pub h2: Element,
}

impl Characteristic {
    pub fn get(&self, i: usize) -> &Element {
        if i == 1 {
            &self.h1
        } else {
            &self.h2
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Element,
    pub tih: Element,
    pub f: Element,
}

/// `(ad x)^k = 0` for some `k`, tested by iterating images of the whole space.
pub fn is_ad_nilpotent(alg: &LieAlgebra, x: &[Q]) -> bool {
    let ad = alg.ad(x);
    let mut space = Subspace::full(alg.dim());
    loop {
        if space.is_zero() {
            return true;
        }
        let next = space.image_under(&ad);
        if next.dim() == space.dim() {
            return false;
        }
        space = next;
    }
}

/// `z_g(M)`: the kernel of the stacked ad-matrices; `z(∅) = g`.
pub fn centralizer(alg: &LieAlgebra, elements: &[&[Q]]) -> Subspace {
    if elements.is_empty() {
        return Subspace::full(alg.dim());
    }
    let ads: Vec<QMatrix> = elements.iter().map(|x| alg.ad(x)).collect();
    let refs: Vec<&QMatrix> = ads.iter().collect();
    QMatrix::vstack(alg.dim(), &refs).kernel()
}

pub fn pair_centralizer(alg: &LieAlgebra, pair: &NilpotentPair) -> Subspace {
    centralizer(alg, &[&pair.e1, &pair.e2])
}

/// `[g, x]`.
pub fn ad_image(alg: &LieAlgebra, x: &[Q]) -> Subspace {
    alg.ad(x).image()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    Commutation,
    UnitEigenvalues,
    Orthogonality,
    Semisimplicity,
    Rationality,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::Commutation => "[h1,h2]=0",
            Clause::UnitEigenvalues => "[hi,ej]=delta_ij ej",
            Clause::Orthogonality => "h orthogonal to z(e)",
            Clause::Semisimplicity => "ad hi semisimple",
            Clause::Rationality => "rational spectrum",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseResult {
    pub clause: Clause,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub clauses: Vec<ClauseResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<Clause> {
        self.clauses.iter().find(|c| !c.passed).map(|c| c.clause)
    }

    pub fn clause(&self, clause: Clause) -> bool {
        self.clauses
            .iter()
            .find(|c| c.clause == clause)
            .is_some_and(|c| c.passed)
    }
}

/// Checks every defining property of a characteristic, in a fixed order.
pub fn verify_characteristic(alg: &LieAlgebra, pair: &NilpotentPair, h1: &Element, h2: &Element) -> VerificationReport {
    let mut clauses = Vec::with_capacity(5);
    let comm = alg.bracket(h1, h2).is_zero();
    clauses.push(ClauseResult {
        clause: Clause::Commutation,
        passed: comm,
        detail: String::new(),
    });

    let mut failures = Vec::new();
    for (i, h) in [(1, h1), (2, h2)] {
        for j in [1, 2] {
            let e = pair.get(j);
            let lhs = alg.bracket(h, e);
            let rhs = if i == j { e.clone() } else { Element::zero(alg.dim()) };
            if lhs != rhs {
                failures.push(format!("[h{i},e{j}]"));
            }
        }
    }
    clauses.push(ClauseResult {
        clause: Clause::UnitEigenvalues,
        passed: failures.is_empty(),
        detail: failures.join(", "),
    });

    let z = pair_centralizer(alg, pair);
    let mut orth = Vec::new();
    for (i, h) in [(1, h1), (2, h2)] {
        if z.basis_vectors().iter().any(|v| !alg.killing_form(h, v).is_zero()) {
            orth.push(format!("h{i}"));
        }
    }
    clauses.push(ClauseResult {
        clause: Clause::Orthogonality,
        passed: orth.is_empty(),
        detail: orth.join(", "),
    });

    let ad1 = alg.ad(h1);
    let ad2 = alg.ad(h2);
    let mut nonss = Vec::new();
    for (i, m) in [(1, &ad1), (2, &ad2)] {
        if !minpoly_is_squarefree(m) {
            nonss.push(format!("h{i}"));
        }
    }
    let semisimple = nonss.is_empty();
    clauses.push(ClauseResult {
        clause: Clause::Semisimplicity,
        passed: semisimple,
        detail: nonss.join(", "),
    });

    let rational = if semisimple && comm {
        match joint_eigenspaces(alg.dim(), &[ad1, ad2]) {
            Ok(_) => (true, String::new()),
            Err(e) => (false, e.to_string()),
        }
    } else {
        (false, "not checked: earlier clause failed".to_string())
    };
    clauses.push(ClauseResult {
        clause: Clause::Rationality,
        passed: rational.0,
        detail: rational.1,
    });
    VerificationReport { clauses }
}

/// Constraint rows `[ad e_i; ad e_j; Z·K]` and right-hand side for one `h`.
fn affine_system(
    alg: &LieAlgebra,
    pair: &NilpotentPair,
    i: usize,
    z: &Subspace,
    commute_with: Option<&Element>,
) -> (QMatrix, Vec<Q>) {
    let n = alg.dim();
    let ei = pair.get(i);
    let ej = pair.get(3 - i);
    let a_i = alg.ad(ei);
    let a_j = alg.ad(ej);
    let zk = if z.is_zero() {
        QMatrix::zeros(0, n)
    } else {
        z.basis().mul(alg.killing()).expect("dims")
    };
    let mut blocks = vec![a_i, a_j, zk];
    let mut rhs: Vec<Q> = ei.iter().map(|x| -x).collect();
    rhs.extend(std::iter::repeat_n(Q::zero(), n + z.dim()));
    if let Some(h) = commute_with {
        blocks.push(alg.ad(h));
        rhs.extend(std::iter::repeat_n(Q::zero(), n));
    }
    let refs: Vec<&QMatrix> = blocks.iter().collect();
    (QMatrix::vstack(n, &refs), rhs)
}

fn is_good(alg: &LieAlgebra, h: &[Q]) -> bool {
    let ad = alg.ad(h);
    minpoly_is_squarefree(&ad) && joint_eigenspaces(alg.dim(), &[ad]).is_ok()
}

/// Candidates on the affine solution manifold: the particular solution, then
/// the particular solution shifted by each kernel basis vector (both signs).
fn candidates(particular: &[Q], kernel: &Subspace) -> Vec<Element> {
    let mut out = vec![Element::new(particular.to_vec())];
    for k in kernel.basis_vectors() {
        for sign in [1i64, -1] {
            let s = Q::from_integer(sign.into());
            out.push(Element::new(
                particular.iter().zip(&k).map(|(p, v)| p + &s * v).collect(),
            ));
        }
    }
    out
}

/// Constructs a characteristic by linear solves, then checks semisimplicity.
///
/// Unknowns are ordered with Cartan coordinates first, so the echelon-form
/// particular solution is supported on the Cartan subalgebra whenever possible.
pub fn solve_characteristic(alg: &LieAlgebra, pair: &NilpotentPair) -> Result<Characteristic, PairError> {
    let z = pair_centralizer(alg, pair);
    let (a1, b1) = affine_system(alg, pair, 1, &z, None);
    let sol1 = a1.solve_affine(&b1).map_err(|_| PairError::NoSolution {
        stage: "h1 linear system",
        reason: "inconsistent".into(),
    })?;
    let mut last_reason = String::new();
    for h1 in candidates(&sol1.particular, &sol1.kernel) {
        if !is_good(alg, &h1) {
            last_reason = "ad h1 not semisimple with rational spectrum".into();
            continue;
        }
        let (a2, b2) = affine_system(alg, pair, 2, &z, Some(&h1));
        let Ok(sol2) = a2.solve_affine(&b2) else {
            last_reason = "h2 linear system inconsistent".into();
            continue;
        };
        for h2 in candidates(&sol2.particular, &sol2.kernel) {
            if !is_good(alg, &h2) {
                last_reason = "ad h2 not semisimple with rational spectrum".into();
                continue;
            }
            if verify_characteristic(alg, pair, &h1, &h2).passed() {
                return Ok(Characteristic { h1, h2 });
            }
            last_reason = "verification failed".into();
        }
    }
    Err(PairError::NoSolution {
        stage: "semisimple representative",
        reason: last_reason,
    })
}

/// Solvable characteristic together with the two defining conditions:
/// commutation and nilpotency.
pub fn is_nilpotent_pair(alg: &LieAlgebra, e1: &Element, e2: &Element) -> Option<(NilpotentPair, Characteristic)> {
    let pair = NilpotentPair::new(alg, e1.clone(), e2.clone()).ok()?;
    let ch = solve_characteristic(alg, &pair).ok()?;
    Some((pair, ch))
}

/// Both clauses of the rectangularity criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rectangularity {
    pub h1_in_image_e1: bool,
    pub h2_in_image_e2: bool,
}

pub fn rectangularity(alg: &LieAlgebra, pair: &NilpotentPair, ch: &Characteristic) -> Rectangularity {
    Rectangularity {
        h1_in_image_e1: ad_image(alg, &pair.e1).contains(&ch.h1),
        h2_in_image_e2: ad_image(alg, &pair.e2).contains(&ch.h2),
    }
}

/// `h1 ∈ [g, e1]`; errors if the equivalent condition on `h2` disagrees.
pub fn is_rectangular(alg: &LieAlgebra, pair: &NilpotentPair, ch: &Characteristic) -> Result<bool, PairError> {
    let r = rectangularity(alg, pair, ch);
    if r.h1_in_image_e1 != r.h2_in_image_e2 {
        return Err(PairError::TheoremViolation("rectangularity clauses disagree".into()));
    }
    Ok(r.h1_in_image_e1)
}

/// Morozov completion: `(ad e)^2 z = -2e`, `h = [e, z]`, then `f` with
/// `[e, f] = h` and `[h, f] = -2f`.
pub fn complete_sl2(alg: &LieAlgebra, e: &Element) -> Result<Sl2Triple, PairError> {
    if e.is_zero() {
        return Err(PairError::ZeroElement);
    }
    let n = alg.dim();
    let ad = alg.ad(e);
    let ad2 = ad.mul(&ad)?;
    let target: Vec<Q> = e.iter().map(|x| x * Q::from_integer((-2).into())).collect();
    let z = ad2
        .solve_affine(&target)
        .map_err(|_| PairError::NotNilpotent("e"))?
        .particular;
    let h = Element::new(ad.apply(&z));
    let adh2 = alg.ad(&h).shift(&Q::from_integer((-2).into()));
    let sys = QMatrix::vstack(n, &[&ad, &adh2]);
    let mut rhs = h.to_vec();
    rhs.extend(std::iter::repeat_n(Q::zero(), n));
    let f = sys.solve_affine(&rhs).map_err(|_| PairError::NoSolution {
        stage: "sl2 completion",
        reason: "no f".into(),
    })?;
    Ok(Sl2Triple {
        e: e.clone(),
        tih: h,
        f: Element::new(f.particular),
    })
}

/// Eigenvalues of `ad tih` are all even.
pub fn is_even_nilpotent(alg: &LieAlgebra, e: &Element) -> Result<bool, PairError> {
    if e.is_zero() {
        return Ok(true);
    }
    let t = complete_sl2(alg, e)?;
    let parts = joint_eigenspaces(alg.dim(), &[alg.ad(&t.tih)])?;
    Ok(parts.iter().all(|p| {
        let v = &p.eigenvalues[0];
        v.is_integer() && v.to_integer() % 2 == 0.into()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, qf};
    use crate::rootsystem::{build_algebra, matrix_unit, CartanType};

    fn algebra(t: &str) -> LieAlgebra {
        build_algebra(&t.parse::<CartanType>().unwrap()).unwrap()
    }

    fn from_matrix(alg: &LieAlgebra, terms: &[(i64, usize, usize)]) -> Element {
        let rep = alg.representation().unwrap();
        let n = rep.degree();
        let mut m = QMatrix::zeros(n, n);
        for &(c, i, j) in terms {
            m = m.add(&matrix_unit(n, i, j).scale(&q(c))).unwrap();
        }
        Element::new(rep.coordinates(&m).unwrap())
    }

    fn from_diagonal(alg: &LieAlgebra, diag: &[Q]) -> Element {
        let rep = alg.representation().unwrap();
        Element::new(rep.coordinates(&QMatrix::diagonal(diag)).unwrap())
    }

    fn sp6() -> (LieAlgebra, NilpotentPair, Characteristic) {
        let alg = algebra("C3");
        let e1 = from_matrix(&alg, &[(1, 2, 3), (-1, 4, 5)]);
        let e2 = from_matrix(&alg, &[(1, 1, 3), (-1, 4, 6)]);
        let third = |v: [i64; 6]| v.iter().map(|&x| qf(x, 3)).collect::<Vec<_>>();
        let h1 = from_diagonal(&alg, &third([-1, 2, -1, 1, -2, 1]));
        let h2 = from_diagonal(&alg, &third([2, -1, -1, 1, 1, -2]));
        let pair = NilpotentPair::new(&alg, e1, e2).unwrap();
        (alg, pair, Characteristic { h1, h2 })
    }

    #[test]
    fn sl2_centralizer_and_trivial_pair() {
        let alg = algebra("A1");
        let e = alg.basis_element(1);
        assert_eq!(centralizer(&alg, &[]).dim(), 3);
        let z = centralizer(&alg, &[&e]);
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&e));

        let (pair, ch) = is_nilpotent_pair(&alg, &e, &Element::zero(3)).unwrap();
        assert!(pair.is_trivial());
        assert!(verify_characteristic(&alg, &pair, &ch.h1, &ch.h2).passed());
        assert_eq!(ch.h1, alg.basis_element(0).scale(&qf(1, 2)));
        assert!(ch.h2.is_zero());
        assert!(is_rectangular(&alg, &pair, &ch).unwrap());

        assert!(is_nilpotent_pair(&alg, &e, &e).is_none());
    }

    #[test]
    fn sp6_reference_characteristic_verifies() {
        let (alg, pair, ch) = sp6();
        assert_eq!(pair_centralizer(&alg, &pair).dim(), 7);
        let report = verify_characteristic(&alg, &pair, &ch.h1, &ch.h2);
        assert!(report.passed(), "{report:?}");

        let doubled = ch.h1.scale(&q(2));
        let r = verify_characteristic(&alg, &pair, &doubled, &ch.h2);
        assert_eq!(r.first_failure(), Some(Clause::UnitEigenvalues));

        let conjugate = &ch.h1 + &pair.e1;
        assert!(verify_characteristic(&alg, &pair, &conjugate, &ch.h2).passed());

        let shifted = &ch.h1 + &pair.e2;
        let r = verify_characteristic(&alg, &pair, &shifted, &ch.h2);
        assert!(!r.clause(Clause::Semisimplicity));
        assert!(r.clause(Clause::UnitEigenvalues));
    }

    #[test]
    fn sp6_solved_characteristic_verifies() {
        let (alg, pair, _) = sp6();
        let ch = solve_characteristic(&alg, &pair).unwrap();
        assert!(verify_characteristic(&alg, &pair, &ch.h1, &ch.h2).passed());
        let r = rectangularity(&alg, &pair, &ch);
        assert_eq!(r.h1_in_image_e1, r.h2_in_image_e2);
    }

    #[test]
    fn sl3_partition_pair_and_completion() {
        let alg = algebra("A2");
        let e1 = from_matrix(&alg, &[(1, 2, 3)]);
        let e2 = from_matrix(&alg, &[(1, 1, 3)]);
        let (pair, ch) = is_nilpotent_pair(&alg, &e1, &e2).unwrap();
        assert_eq!(pair_centralizer(&alg, &pair).dim(), 2);
        assert!(verify_characteristic(&alg, &pair, &ch.h1, &ch.h2).passed());

        let e = from_matrix(&alg, &[(1, 1, 2)]);
        let t = complete_sl2(&alg, &e).unwrap();
        assert_eq!(t.tih, from_diagonal(&alg, &[q(1), q(-1), q(0)]));
        assert_eq!(alg.bracket(&t.e, &t.f), t.tih);
        assert_eq!(alg.bracket(&t.tih, &t.f), t.f.scale(&q(-2)));
        assert_eq!(complete_sl2(&alg, &Element::zero(8)), Err(PairError::ZeroElement));
    }

    #[test]
    fn sl4_commuting_triples_are_rectangular() {
        let alg = algebra("A3");
        let e1 = from_matrix(&alg, &[(1, 1, 2)]);
        let e2 = from_matrix(&alg, &[(1, 3, 4)]);
        let (pair, ch) = is_nilpotent_pair(&alg, &e1, &e2).unwrap();
        assert!(is_rectangular(&alg, &pair, &ch).unwrap());
        assert!(!is_even_nilpotent(&alg, &e1).unwrap());
        let e = from_matrix(&alg, &[(1, 1, 2), (1, 3, 4)]);
        assert!(is_even_nilpotent(&alg, &e).unwrap());
    }

    #[test]
    fn nilpotency() {
        let alg = algebra("A2");
        assert!(is_ad_nilpotent(&alg, &alg.basis_element(3)));
        assert!(!is_ad_nilpotent(&alg, &alg.basis_element(0)));
    }
}
