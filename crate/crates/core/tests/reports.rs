use nilpairs::catalog::{self, Exceptional, DEFAULT_SEED};
use nilpairs::classify::{classification_report, labels_report};
use nilpairs::exactla::q;
use nilpairs::render::GridRender;
use nilpairs::report::ReportDocument;

#[test]
fn every_catalog_report_round_trips_through_json() {
    for id in catalog::catalog_ids() {
        let e = catalog::entry(&id, DEFAULT_SEED).unwrap();
        let doc = ReportDocument::for_entry(&e, DEFAULT_SEED).unwrap();
        let back = ReportDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc, "{id}");
        assert!(doc.passed(), "{id}");
        let grid = GridRender::parse_ascii(&doc.grid.to_ascii()).unwrap();
        assert_eq!(grid, doc.grid, "{id}");
        assert_eq!(grid.total(), e.algebra.dim(), "{id}");
    }
}

#[test]
fn sp4_family_violates_the_coxeter_bound_only_off_the_richardson_side() {
    let e = catalog::sp_almost_principal(1, DEFAULT_SEED).unwrap();
    let a = e.analysis().unwrap();
    let r = classification_report(&a);
    assert!(r.almost_principal);
    let l = labels_report(&a, &r).unwrap();
    assert!(!l.adapted_to_h2.richardson);
    assert!(!l.adapted_to_h2.coxeter_bound_holds);
    assert_eq!(l.adapted_to_h2.prchar_iii, None);
    assert!(l.adapted_to_h1.richardson);
    assert!(l.adapted_to_h1.coxeter_bound_holds);
    assert_eq!(l.adapted_to_h1.prchar_iii, Some(true));
}

#[test]
fn e6_labels_attain_the_coxeter_bound() {
    let e = catalog::exceptional_pair(Exceptional::E6, DEFAULT_SEED).unwrap();
    let a = e.analysis().unwrap();
    let r = classification_report(&a);
    let l = labels_report(&a, &r).unwrap();
    let o = &l.adapted_to_h2;
    assert_eq!(o.levi.type_label(), "D5");
    assert_eq!(o.coxeter_bound, -7);
    assert!(o.coxeter_bound_attained);
    assert!(o.labels_i && o.labels_ii && o.labels_iii && o.prchar_ii);
    assert_eq!(o.labels_h2, [0, 0, 0, 0, 0, 1].map(q).to_vec());
    assert_eq!(o.labels_h1.iter().min(), Some(&q(-7)));
}

#[test]
fn labels_need_an_integral_pair() {
    let e = catalog::sp6_example().unwrap();
    let a = e.analysis().unwrap();
    let r = classification_report(&a);
    assert!(labels_report(&a, &r).is_err());
}
