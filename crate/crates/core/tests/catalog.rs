use nilpairs::catalog::{self, CatalogError, Exceptional, DEFAULT_SEED};
use nilpairs::classify::{classification_report, property_checks};

fn run_battery(e: &catalog::CatalogEntry) {
    let a = e.analysis().unwrap();
    let r = classification_report(&a);
    assert!(r.violations.is_empty(), "{}: {:?}", e.id, r.violations);
    for c in property_checks(&a, &r, DEFAULT_SEED) {
        assert!(c.passed, "{}: {} failed: {}", e.id, c.name, c.detail);
    }
}

#[test]
fn every_catalog_entry_builds_and_passes_checks() {
    for id in catalog::catalog_ids() {
        let e = catalog::entry(&id, DEFAULT_SEED).unwrap_or_else(|err| panic!("{id}: {err}"));
        assert_eq!(e.id, id);
        run_battery(&e);
    }
}

#[test]
fn unknown_ids_are_rejected() {
    for id in ["sl3-partition-2-2", "sp4n-n0", "g2-foo", "sl-partition-1"] {
        assert!(matches!(
            catalog::entry(id, DEFAULT_SEED),
            Err(CatalogError::Unknown(_) | CatalogError::InvalidPartition(_))
        ));
    }
}

#[test]
fn partitions_of_five() {
    assert_eq!(catalog::partitions(5).len(), 7);
    assert_eq!(catalog::partitions(4)[0], vec![4]);
}

#[test]
fn sp6_is_the_image_of_the_21_partition() {
    let p = catalog::partition_pair(3, &[2, 1]).unwrap();
    assert_eq!(p.cells, vec![(2, 1), (1, 2), (1, 1)]);
    let emb = catalog::embed_sl_in_sp(3).unwrap();
    let sp6 = catalog::sp6_example().unwrap();
    assert_eq!(emb.map(&p.e1), sp6.pair.e1);
    assert_eq!(emb.map(&p.e2), sp6.pair.e2);
    assert_eq!(emb.map(&p.h1), sp6.ch.h1);
    assert_eq!(emb.map(&p.h2), sp6.ch.h2);
}

#[test]
fn generic_search_is_reproducible() {
    let a = catalog::exceptional_pair(Exceptional::E6, 7).unwrap();
    let b = catalog::exceptional_pair(Exceptional::E6, 7).unwrap();
    assert_eq!(a.pair.e1, b.pair.e1);
    assert_eq!(a.pair.e2, b.pair.e2);
}

#[test]
fn root_sum_search_in_small_rank_finds_only_wonderful_pairs() {
    assert!(catalog::search_non_wonderful("A3", 1).unwrap().is_empty());
    assert!(catalog::search_non_wonderful("C2", 1).unwrap().is_empty());
}

#[test]
fn cross_ratio_family_is_integral_and_not_wonderful() {
    use nilpairs::classify::xarak_check;
    use nilpairs::exactla::qf;
    use nilpairs::grading::LimitMode;
    for lambda in [qf(2, 1), qf(-1, 1), qf(1, 2)] {
        let e = catalog::cross_ratio_pair(&lambda).unwrap();
        e.check_expected().unwrap();
        let a = e.analysis().unwrap();
        let r = classification_report(&a);
        assert!(r.integral && !r.wonderful, "{}", e.id);
        assert!(r.certificate.failures().next().is_some());
        // the three vanishing conditions hold nonetheless
        assert_eq!(xarak_check(&a).unwrap(), (false, true));
        assert_eq!(a.hh.dim(), 9);
        assert_eq!(a.lim_h(LimitMode::Both).dim(), 8);
        let failed: Vec<_> = property_checks(&a, &r, DEFAULT_SEED)
            .into_iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        assert_eq!(failed, ["ravno", "sovpad", "dimension-identity", "xarak"], "{}", e.id);
    }
    assert!(catalog::entry("sl8-cross-ratio-1", DEFAULT_SEED).is_err());
    assert_eq!(
        catalog::entry("sl8-cross-ratio-3", DEFAULT_SEED).unwrap().id,
        "sl8-cross-ratio-3"
    );
}

#[test]
fn pair_limit_of_a_generic_cartan_line_collapses() {
    use nilpairs::exactla::Subspace;
    use nilpairs::grading::LimitMode;
    let e = catalog::entry("sl3-partition-2-1", DEFAULT_SEED).unwrap();
    let a = e.analysis().unwrap();
    let h = a.hh.basis_vectors();
    let x: Vec<_> = h[0].iter().zip(&h[1]).map(|(u, v)| u + v + v).collect();
    let line = Subspace::span_of(a.dim(), &[x]);
    assert_eq!(a.limit(&line, LimitMode::E1).dim(), 1);
    assert_eq!(a.limit(&line, LimitMode::E2).dim(), 1);
    // only the whole of z(h) keeps its dimension under the pair limit
    assert_eq!(a.limit(&line, LimitMode::Both).dim(), 0);
    assert_eq!(a.lim_h(LimitMode::Both).dim(), 2);
}
