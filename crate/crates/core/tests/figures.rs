use nilpairs::catalog::{self, Exceptional, DEFAULT_SEED};
use nilpairs::exactla::q;
use nilpairs::render::GridRender;
use nilpairs::suite::{self, compare_golden, SuiteOptions};

#[test]
fn e6_grid_matches_golden() {
    let e = catalog::exceptional_pair(Exceptional::E6, DEFAULT_SEED).unwrap();
    compare_golden(&e, &suite::default_golden_dir().join("figure1.txt")).unwrap();
    let a = e.analysis().unwrap();
    let g = GridRender::from_grading(&a.grading, Some(&a.z_e));
    assert_eq!(g.total(), 78);
    assert_eq!(g.stars(), 6);
    assert_eq!(g.dim_at(&q(-4), &q(1)), 2);
}

#[test]
fn e7_grid_matches_golden() {
    let e = catalog::exceptional_pair(Exceptional::E7, DEFAULT_SEED).unwrap();
    compare_golden(&e, &suite::default_golden_dir().join("figure2.txt")).unwrap();
    let a = e.analysis().unwrap();
    let g = GridRender::from_grading(&a.grading, Some(&a.z_e));
    assert_eq!(g.total(), 133);
    assert_eq!(g.stars(), 7);
    assert_eq!(g.dim_at(&q(0), &q(0)), 7);
}

#[test]
fn corrupted_golden_is_detected() {
    let dir = tempdir();
    for (file, _) in suite::FIGURES {
        let text = std::fs::read_to_string(suite::default_golden_dir().join(file)).unwrap();
        std::fs::write(dir.join(file), text).unwrap();
    }
    let path = dir.join("figure1.txt");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen(" 6 ", " 7 ", 1)).unwrap();
    let opts = SuiteOptions {
        filter: Some("figures".into()),
        golden_dir: dir.clone(),
        ..SuiteOptions::default()
    };
    let summary = suite::run(&opts);
    assert!(!summary.passed());
    assert_eq!(summary.tallies["figures"].passed, 1);
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("nilpairs-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
