//! Named pairs: sl_n partition pairs, the sl_n → sp_2n embedding, the sp6
//! fractional example, the almost principal sp_4n series, the E6/E7 principal
//! pairs, small rectangular pairs and searched non-wonderful pairs.

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::{classification_report, Analysis, ClassifyError};
use crate::exactla::{q, qf, ExactError, QMatrix, Subspace, Q};
use crate::grading::{BiGrading, Cell, GradingError};
use crate::pairs::{
    centralizer, solve_characteristic, verify_characteristic, Characteristic, NilpotentPair, PairError,
};
use crate::rootsystem::{build_algebra, matrix_unit, CartanType, Element, LieAlgebra, RootError};

/// Seed used by every generic-element search unless overridden.
pub const DEFAULT_SEED: u64 = 20_000_917;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    Unknown(String),
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("generic search failed after {attempts} attempts (seed {seed})")]
    SearchFailed { seed: u64, attempts: usize },
    #[error("{entry}: expected {quantity} = {expected}, found {found}")]
    Mismatch {
        entry: String,
        quantity: String,
        expected: String,
        found: String,
    },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Stated in the worked example the entry reproduces.
    Reference,
    /// Immediate from the definitions.
    Trivial,
    /// Computed independently.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub quantity: &'static str,
    pub value: String,
    pub source: Source,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: LieAlgebra,
    pub pair: NilpotentPair,
    pub ch: Characteristic,
    pub expected: Vec<Expected>,
    pub seed: Option<u64>,
}

impl CatalogEntry {
    pub fn analysis(&self) -> Result<Analysis<'_>, ClassifyError> {
        Analysis::new(&self.algebra, self.pair.clone(), self.ch.clone())
    }

    /// Recomputes every expected value and fails on the first mismatch.
    pub fn check_expected(&self) -> Result<(), CatalogError> {
        let a = self.analysis()?;
        let r = classification_report(&a);
        for e in &self.expected {
            let found = match e.quantity {
                "dim z(e)" => r.dim_z_e.to_string(),
                "dim z(h)" => r.dim_z_h.to_string(),
                "wonderful" => r.wonderful.to_string(),
                "integral" => r.integral.to_string(),
                "principal" => r.principal.to_string(),
                "almost principal" => r.almost_principal.to_string(),
                "rectangular" => r.rectangular.to_string(),
                "eigenvalues on z(e)" => format_cells(&a.z_e.eigenvalues()),
                other => {
                    if let Some(cell) = other.strip_prefix("dim g") {
                        a.grading.dim_at(&parse_cell(cell)).to_string()
                    } else {
                        continue;
                    }
                }
            };
            if found != e.value {
                return Err(CatalogError::Mismatch {
                    entry: self.id.clone(),
                    quantity: e.quantity.to_string(),
                    expected: e.value.clone(),
                    found,
                });
            }
        }
        Ok(())
    }
}

fn parse_cell(s: &str) -> Cell {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let mut it = inner.split(',').map(|x| x.trim().parse::<Q>().expect("cell"));
    Cell::new(it.next().expect("p"), it.next().expect("q"))
}

/// Sorted cells as `(p,q) (p,q) ...`.
pub fn format_cells(cells: &[Cell]) -> String {
    let mut v: Vec<(Q, Q)> = cells.iter().map(|c| (c.p.clone(), c.q.clone())).collect();
    v.sort();
    v.iter()
        .map(|(p, q)| format!("({p},{q})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn expect(quantity: &'static str, value: impl ToString, source: Source) -> Expected {
    Expected {
        quantity,
        value: value.to_string(),
        source,
    }
}

fn algebra(t: &str) -> Result<LieAlgebra, CatalogError> {
    Ok(build_algebra(&t.parse::<CartanType>()?)?)
}

/// Element of a classical algebra from its defining-representation matrix.
pub fn from_matrix(alg: &LieAlgebra, m: &QMatrix) -> Option<Element> {
    alg.representation()?.coordinates(m).map(Element::new)
}

fn from_units(alg: &LieAlgebra, terms: &[(Q, usize, usize)]) -> Element {
    let n = alg.representation().expect("classical").degree();
    let mut m = QMatrix::zeros(n, n);
    for (c, i, j) in terms {
        m = m.add(&matrix_unit(n, *i, *j).scale(c)).expect("square");
    }
    from_matrix(alg, &m).expect("matrix lies in the algebra")
}

fn from_labels(alg: &LieAlgebra, labels: &[i64]) -> Result<Element, CatalogError> {
    let l: Vec<Q> = labels.iter().map(|&x| q(x)).collect();
    Ok(alg.element_from_labels(&l)?)
}

/// A principal pair in `sl_n` attached to a Young diagram.
#[derive(Clone, Debug)]
pub struct PartitionPair {
    pub n: usize,
    pub partition: Vec<usize>,
    /// Cells `(row, col)`, 1-based, in basis order.
    pub cells: Vec<(usize, usize)>,
    pub algebra: LieAlgebra,
    pub e1: Element,
    pub e2: Element,
    pub h1: Element,
    pub h2: Element,
}

/// Cells ordered by `r + c` descending, then `r` descending; `e1` moves a cell
/// one column right, `e2` one row down, and `h1`, `h2` act on the cell
/// `(r, c)` by `c - c̄` and `r - r̄`.
pub fn partition_pair(n: usize, partition: &[usize]) -> Result<PartitionPair, CatalogError> {
    let valid = n >= 2
        && partition.iter().sum::<usize>() == n
        && partition.iter().all(|&x| x > 0)
        && partition.windows(2).all(|w| w[0] >= w[1]);
    if !valid {
        return Err(CatalogError::InvalidPartition(partition.to_vec()));
    }
    let mut cells: Vec<(usize, usize)> = partition
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
        .collect();
    cells.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
    let index = |cell: (usize, usize)| cells.iter().position(|&x| x == cell).map(|i| i + 1);
    let alg = algebra(&format!("A{}", n - 1))?;
    let mut e1 = Vec::new();
    let mut e2 = Vec::new();
    for &(r, c) in &cells {
        let src = index((r, c)).expect("cell");
        if let Some(t) = index((r, c + 1)) {
            e1.push((Q::one(), t, src));
        }
        if let Some(t) = index((r + 1, c)) {
            e2.push((Q::one(), t, src));
        }
    }
    let nq = Q::from_integer(n.into());
    let rbar: Q = cells.iter().map(|&(r, _)| q(r as i64)).sum::<Q>() / &nq;
    let cbar: Q = cells.iter().map(|&(_, c)| q(c as i64)).sum::<Q>() / &nq;
    let d1: Vec<Q> = cells.iter().map(|&(_, c)| q(c as i64) - &cbar).collect();
    let d2: Vec<Q> = cells.iter().map(|&(r, _)| q(r as i64) - &rbar).collect();
    let h1 = from_matrix(&alg, &QMatrix::diagonal(&d1)).expect("traceless");
    let h2 = from_matrix(&alg, &QMatrix::diagonal(&d2)).expect("traceless");
    Ok(PartitionPair {
        n,
        partition: partition.to_vec(),
        cells,
        e1: from_units(&alg, &e1),
        e2: from_units(&alg, &e2),
        algebra: alg,
        h1,
        h2,
    })
}

/// `A ↦ diag(A, -K Aᵀ K)` from `sl_n` into `sp_2n` in the Witt basis.
#[derive(Clone, Debug)]
pub struct SlInSp {
    pub n: usize,
    pub source: LieAlgebra,
    pub target: LieAlgebra,
}

impl SlInSp {
    pub fn matrix(&self, a: &QMatrix) -> QMatrix {
        let n = self.n;
        let mut m = QMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                m.set(i, j, x.clone());
                m.set(2 * n - 1 - j, 2 * n - 1 - i, -x);
            }
        }
        m
    }

    pub fn map(&self, x: &Element) -> Element {
        let rep = self.source.representation().expect("classical");
        from_matrix(&self.target, &self.matrix(&rep.to_matrix(x))).expect("image lies in sp")
    }
}

pub fn embed_sl_in_sp(n: usize) -> Result<SlInSp, CatalogError> {
    Ok(SlInSp {
        n,
        source: algebra(&format!("A{}", n - 1))?,
        target: algebra(&format!("C{n}"))?,
    })
}

fn entry_from(
    id: &str,
    algebra: LieAlgebra,
    e1: Element,
    e2: Element,
    h1: Element,
    h2: Element,
    expected: Vec<Expected>,
    seed: Option<u64>,
) -> Result<CatalogEntry, CatalogError> {
    let pair = NilpotentPair::new(&algebra, e1, e2)?;
    let v = verify_characteristic(&algebra, &pair, &h1, &h2);
    if !v.passed() {
        return Err(CatalogError::Mismatch {
            entry: id.to_string(),
            quantity: "characteristic".into(),
            expected: "all clauses pass".into(),
            found: format!("{:?} fails", v.first_failure()),
        });
    }
    let entry = CatalogEntry {
        id: id.to_string(),
        algebra,
        pair,
        ch: Characteristic { h1, h2 },
        expected,
        seed,
    };
    entry.check_expected()?;
    Ok(entry)
}

pub fn partition_entry(n: usize, partition: &[usize]) -> Result<CatalogEntry, CatalogError> {
    let p = partition_pair(n, partition)?;
    let id = format!(
        "sl{n}-partition-{}",
        partition.iter().map(ToString::to_string).collect::<Vec<_>>().join("-")
    );
    let expected = vec![
        expect("dim z(e)", n - 1, Source::Derived),
        expect("principal", true, Source::Derived),
    ];
    entry_from(&id, p.algebra, p.e1, p.e2, p.h1, p.h2, expected, None)
}

pub fn sp6_example() -> Result<CatalogEntry, CatalogError> {
    let alg = algebra("C3")?;
    let e1 = from_units(&alg, &[(q(1), 2, 3), (q(-1), 4, 5)]);
    let e2 = from_units(&alg, &[(q(1), 1, 3), (q(-1), 4, 6)]);
    let third = |v: [i64; 6]| QMatrix::diagonal(&v.iter().map(|&x| qf(x, 3)).collect::<Vec<_>>());
    let h1 = from_matrix(&alg, &third([-1, 2, -1, 1, -2, 1])).expect("in sp6");
    let h2 = from_matrix(&alg, &third([2, -1, -1, 1, 1, -2])).expect("in sp6");
    let eig = [
        (0, 1, 0, 1),
        (1, 1, 0, 1),
        (0, 1, 1, 1),
        (1, 3, 1, 3),
        (2, 3, 2, 3),
        (4, 3, -2, 3),
        (-2, 3, 4, 3),
    ]
    .iter()
    .map(|&(a, b, c, d)| Cell::new(qf(a, b), qf(c, d)))
    .collect::<Vec<_>>();
    let expected = vec![
        expect("dim z(e)", 7, Source::Reference),
        expect("eigenvalues on z(e)", format_cells(&eig), Source::Derived),
        expect("wonderful", true, Source::Reference),
        expect("integral", false, Source::Reference),
    ];
    entry_from("sp6-denom", alg, e1, e2, h1, h2, expected, None)
}

/// Random nonzero integer combination of a basis, coefficients in `[-3, 3]`.
fn random_in(rng: &mut ChaCha8Rng, s: &Subspace) -> Vec<Q> {
    loop {
        let coeffs: Vec<Q> = (0..s.dim()).map(|_| q(rng.gen_range(-3i64..=3))).collect();
        if coeffs.iter().any(|c| !c.is_zero()) || s.dim() == 0 {
            return s.combine(&coeffs);
        }
    }
}

/// Generic `e1 ∈ g_{1,0}` and `e2 ∈ g_{0,1} ∩ z(e1)` with `dim z(e)` as
/// given and `(h1, h2)` a characteristic.
pub fn generic_pair(
    alg: &LieAlgebra,
    h1: &Element,
    h2: &Element,
    dim_z: usize,
    seed: u64,
) -> Result<NilpotentPair, CatalogError> {
    const ATTEMPTS: usize = 20;
    let grading = BiGrading::new(alg, h1, h2)?;
    let zero = Subspace::zero(alg.dim());
    let g10 = grading.cell(&Cell::int(1, 0)).unwrap_or(&zero).clone();
    let g01 = grading.cell(&Cell::int(0, 1)).unwrap_or(&zero).clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let e1 = Element::new(random_in(&mut rng, &g10));
        let room = centralizer(alg, &[&e1]).intersect(&g01)?;
        let e2 = Element::new(random_in(&mut rng, &room));
        let Ok(pair) = NilpotentPair::new(alg, e1, e2) else {
            continue;
        };
        if centralizer(alg, &[&pair.e1, &pair.e2]).dim() == dim_z && verify_characteristic(alg, &pair, h1, h2).passed()
        {
            return Ok(pair);
        }
    }
    Err(CatalogError::SearchFailed {
        seed,
        attempts: ATTEMPTS,
    })
}

/// Integral almost principal pair in `sp_4n` with `h1 = (1, ..., 1, -2n)` and
/// `h2 = (0, ..., 0, 1)`.
pub fn sp_almost_principal(n: usize, seed: u64) -> Result<CatalogEntry, CatalogError> {
    let rank = 2 * n;
    let alg = algebra(&format!("C{rank}"))?;
    let mut l1 = vec![1i64; rank];
    l1[rank - 1] = -(2 * n as i64);
    let mut l2 = vec![0i64; rank];
    l2[rank - 1] = 1;
    let h1 = from_labels(&alg, &l1)?;
    let h2 = from_labels(&alg, &l2)?;
    let pair = generic_pair(&alg, &h1, &h2, rank + 1, seed)?;
    let expected = vec![
        expect("dim z(e)", rank + 1, Source::Reference),
        expect("almost principal", true, Source::Reference),
        expect("integral", true, Source::Reference),
    ];
    entry_from(
        &format!("sp4n-n{n}"),
        alg,
        pair.e1,
        pair.e2,
        h1,
        h2,
        expected,
        Some(seed),
    )
}

/// Which exceptional example.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exceptional {
    E6,
    E7,
}

/// Label vectors in Bourbaki order `α1..αl`.
///
/// E6: `h2` is 1 on `α6` (the other diagram-symmetric choice is `α1`).
/// E7: the figure lists nodes in the order `α7 α6 α5 α4 α3 α1 | α2`, so the
/// printed `(-1, 1, -4, 1, 1, 1, 1)` and `(1, 0, 1, 0, 0, 0, 0)` become the
/// vectors below.
pub fn exceptional_labels(which: Exceptional) -> (Vec<i64>, Vec<i64>) {
    match which {
        Exceptional::E6 => (vec![1, 1, 1, 1, 1, -7], vec![0, 0, 0, 0, 0, 1]),
        Exceptional::E7 => (vec![1, 1, 1, 1, -4, 1, -1], vec![0, 0, 0, 0, 1, 0, 1]),
    }
}

/// Node order used by the printed E7 labels, as Bourbaki indices.
pub const E7_PRINTED_ORDER: [usize; 7] = [7, 6, 5, 4, 3, 1, 2];

pub fn exceptional_pair(which: Exceptional, seed: u64) -> Result<CatalogEntry, CatalogError> {
    let (name, id) = match which {
        Exceptional::E6 => ("E6", "e6-d5-2a1"),
        Exceptional::E7 => ("E7", "e7-a4a1"),
    };
    let alg = algebra(name)?;
    let (l1, l2) = exceptional_labels(which);
    let h1 = from_labels(&alg, &l1)?;
    let h2 = from_labels(&alg, &l2)?;
    let rank = alg.rank();
    let pair = generic_pair(&alg, &h1, &h2, rank, seed)?;
    let mut expected = vec![
        expect("dim z(e)", rank, Source::Reference),
        expect("principal", true, Source::Reference),
        expect("dim g(0,0)", rank, Source::Reference),
    ];
    if which == Exceptional::E6 {
        expected.push(expect("dim g(1,0)", 5, Source::Reference));
        expected.push(expect("dim g(-4,1)", 2, Source::Reference));
    }
    entry_from(id, alg, pair.e1, pair.e2, h1, h2, expected, Some(seed))
}

/// `(e, 0)` in `sl2` with the solved characteristic.
pub fn sl2_trivial() -> Result<CatalogEntry, CatalogError> {
    let alg = algebra("A1")?;
    let e = alg.basis_element(1);
    let h1 = alg.basis_element(0).scale(&qf(1, 2));
    let expected = vec![
        expect("dim z(e)", 1, Source::Trivial),
        expect("principal", true, Source::Derived),
        expect("rectangular", true, Source::Trivial),
    ];
    entry_from(
        "sl2-trivial",
        alg,
        e,
        Element::zero(3),
        h1,
        Element::zero(3),
        expected,
        None,
    )
}

/// Commuting sl2-triples through `E12` and `E34` in `sl4`.
pub fn sl4_rectangular() -> Result<CatalogEntry, CatalogError> {
    let alg = algebra("A3")?;
    let e1 = from_units(&alg, &[(q(1), 1, 2)]);
    let e2 = from_units(&alg, &[(q(1), 3, 4)]);
    let half = |v: [i64; 4]| QMatrix::diagonal(&v.iter().map(|&x| qf(x, 2)).collect::<Vec<_>>());
    let h1 = from_matrix(&alg, &half([1, -1, 0, 0])).expect("traceless");
    let h2 = from_matrix(&alg, &half([0, 0, 1, -1])).expect("traceless");
    let expected = vec![expect("rectangular", true, Source::Derived)];
    entry_from("sl4-rect-e12-e34", alg, e1, e2, h1, h2, expected, None)
}

/// Root vectors of the two long simple-direction roots `2ε1`, `2ε2` of `sp4`:
/// a fractional almost principal rectangular pair.
pub fn sp4_long_roots() -> Result<CatalogEntry, CatalogError> {
    let alg = algebra("C2")?;
    // Witt basis 1, 2, 2', 1' = 1, 2, 3, 4: 2ε1 ↔ v14, 2ε2 ↔ v23.
    let e1 = from_units(&alg, &[(q(1), 1, 4)]);
    let e2 = from_units(&alg, &[(q(1), 2, 3)]);
    let half = |v: [i64; 4]| QMatrix::diagonal(&v.iter().map(|&x| qf(x, 2)).collect::<Vec<_>>());
    let h1 = from_matrix(&alg, &half([1, 0, 0, -1])).expect("in sp4");
    let h2 = from_matrix(&alg, &half([0, 1, -1, 0])).expect("in sp4");
    let expected = vec![
        expect("dim z(e)", 3, Source::Derived),
        expect("almost principal", true, Source::Derived),
        expect("rectangular", true, Source::Derived),
        expect("integral", false, Source::Derived),
    ];
    entry_from("sp4-long-roots", alg, e1, e2, h1, h2, expected, None)
}

/// Pairs of small sums of root vectors in `alg` that are nilpotent pairs with
/// a solvable characteristic but are not wonderful, in a fixed scan order.
pub fn search_non_wonderful(type_name: &str, limit: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    let alg = algebra(type_name)?;
    let l = alg.rank();
    let npos = alg.root_system().num_positive();
    let roots: Vec<usize> = (l..l + npos).collect();
    let mut candidates: Vec<Vec<usize>> = roots.iter().map(|&r| vec![r]).collect();
    for (i, &a) in roots.iter().enumerate() {
        for &b in &roots[i + 1..] {
            candidates.push(vec![a, b]);
        }
    }
    let element = |idx: &[usize]| {
        idx.iter()
            .fold(Element::zero(alg.dim()), |acc, &i| &acc + &alg.basis_element(i))
    };
    let mut found = Vec::new();
    for x in &candidates {
        for y in &candidates {
            if found.len() >= limit {
                return Ok(found);
            }
            let (e1, e2) = (element(x), element(y));
            let Ok(pair) = NilpotentPair::new(&alg, e1, e2) else {
                continue;
            };
            if pair.is_trivial() {
                continue;
            }
            let Ok(ch) = solve_characteristic(&alg, &pair) else {
                continue;
            };
            let a = Analysis::new(&alg, pair.clone(), ch.clone())?;
            if classification_report(&a).wonderful {
                continue;
            }
            let id = format!("{}-nonwonderful-{}", type_name.to_lowercase(), found.len() + 1);
            let expected = vec![expect("wonderful", false, Source::Derived)];
            found.push(entry_from(
                &id,
                alg.clone(),
                pair.e1,
                pair.e2,
                ch.h1,
                ch.h2,
                expected,
                None,
            )?);
        }
    }
    Ok(found)
}

/// Eight-dimensional bigraded `sl8`-module whose two nilpotent operators carry a
/// cross-ratio `λ` on the `(1,1)`-block. Vertices `1..8` sit at weights
/// `(0,1), (1,0), (1,1), (1,1), (0,2), (2,0), (1,2), (2,1)`.
///
/// For `λ ∉ {0, 1}` the pair is integral and not wonderful, while `z_g(e)`
/// vanishes on the negative quadrant and on both negative half-axes: the
/// vanishing conditions alone do not force wonderfulness, and `lim_e 𝔥` is one
/// dimension short of `𝔥`.
pub fn cross_ratio_pair(lambda: &Q) -> Result<CatalogEntry, CatalogError> {
    let alg = algebra("A7")?;
    let e1 = from_units(
        &alg,
        &[
            (q(1), 3, 1),
            (q(1), 6, 2),
            (lambda.clone(), 7, 5),
            (q(1), 8, 3),
            (q(-1), 8, 4),
        ],
    );
    let e2 = from_units(
        &alg,
        &[
            (q(1), 5, 1),
            (q(1), 4, 2),
            (q(-1), 8, 6),
            (lambda.clone(), 7, 3),
            (q(-1), 7, 4),
        ],
    );
    let pair = NilpotentPair::new(&alg, e1, e2)?;
    let ch = solve_characteristic(&alg, &pair)?;
    let id = format!("sl8-cross-ratio-{lambda}");
    let expected = vec![
        expect("dim z(e)", 12, Source::Derived),
        expect("dim z(h)", 9, Source::Derived),
        expect("integral", true, Source::Derived),
        expect("wonderful", false, Source::Derived),
    ];
    entry_from(&id, alg, pair.e1, pair.e2, ch.h1, ch.h2, expected, None)
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Stable identifiers of the main catalog.
pub fn catalog_ids() -> Vec<String> {
    let mut ids = vec!["sl2-trivial".to_string()];
    for n in 2..=5 {
        for p in partitions(n) {
            let tail: Vec<String> = p.iter().map(ToString::to_string).collect();
            ids.push(format!("sl{n}-partition-{}", tail.join("-")));
        }
    }
    ids.extend(
        [
            "sl4-rect-e12-e34",
            "sp4-long-roots",
            "sp6-denom",
            "sp4n-n1",
            "sp4n-n2",
            "e6-d5-2a1",
            "e7-a4a1",
        ]
        .map(String::from),
    );
    ids
}

pub fn entry(id: &str, seed: u64) -> Result<CatalogEntry, CatalogError> {
    let unknown = || CatalogError::Unknown(id.to_string());
    match id {
        "sl2-trivial" => sl2_trivial(),
        "sl4-rect-e12-e34" => sl4_rectangular(),
        "sp4-long-roots" => sp4_long_roots(),
        "sp6-denom" => sp6_example(),
        "e6-d5-2a1" => exceptional_pair(Exceptional::E6, seed),
        "e7-a4a1" => exceptional_pair(Exceptional::E7, seed),
        _ => {
            if let Some(l) = id.strip_prefix("sl8-cross-ratio-") {
                let l = crate::serial::q_from_str(l).map_err(|_| unknown())?;
                if l.is_zero() || l.is_one() {
                    return Err(unknown());
                }
                return cross_ratio_pair(&l);
            }
            if let Some(n) = id.strip_prefix("sp4n-n") {
                let n: usize = n.parse().map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                return sp_almost_principal(n, seed);
            }
            let rest = id.strip_prefix("sl").ok_or_else(unknown)?;
            let (n, parts) = rest.split_once("-partition-").ok_or_else(unknown)?;
            let n: usize = n.parse().map_err(|_| unknown())?;
            let parts: Vec<usize> = parts
                .split('-')
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| unknown())?;
            partition_entry(n, &parts)
        }
    }
}
