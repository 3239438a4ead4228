use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nilpairs::rootsystem::build_algebra;
use nilpairs_bench::{battery, classify, entry, report_json, ENTRIES};

fn algebras(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_algebra");
    for name in ["A3", "C3", "G2", "E6"] {
        let t = name.parse().unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(name), &t, |b, t| {
            b.iter(|| build_algebra(black_box(t)))
        });
    }
    g.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for id in ENTRIES {
        let e = entry(id);
        g.bench_with_input(BenchmarkId::from_parameter(id), &e, |b, e| {
            b.iter(|| classify(black_box(e)))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("battery");
    g.sample_size(10);
    for id in &ENTRIES[..3] {
        let e = entry(id);
        g.bench_with_input(BenchmarkId::from_parameter(id), &e, |b, e| {
            b.iter(|| battery(black_box(e)))
        });
    }
    g.finish();

    let e = entry("sp6-denom");
    c.bench_function("report_json/sp6-denom", |b| b.iter(|| report_json(black_box(&e))));
}

criterion_group!(benches, algebras, pipeline);
criterion_main!(benches);
