use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use twisted_dirac::{
    enumerate_line_bundle, enumerate_normal, family_highest_weight, family_multiplicity,
    substitution_merge, weyl_dim, EmbeddingParams, FamilyIndex,
};

fn line_bundle(c: &mut Criterion) {
    let mut group = c.benchmark_group("line_bundle");
    for d in [1i64, 3, 5, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| enumerate_line_bundle(black_box(d), 0, 400).unwrap())
        });
    }
    group.finish();
}

fn normal(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal");
    for (d, n) in [(1i64, 11i64), (3, 9), (5, 11)] {
        let params = EmbeddingParams::new(d, n).unwrap();
        group.bench_with_input(BenchmarkId::new("direct", format!("{d}_{n}")), &params, |b, p| {
            b.iter(|| enumerate_normal(*p, 200).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("merge", format!("{d}_{n}")), &params, |b, p| {
            b.iter(|| substitution_merge(*p, 200).unwrap())
        });
    }
    group.finish();
}

fn multiplicity_routes(c: &mut Criterion) {
    let idx = FamilyIndex::first(4, 1, 6);
    let (d, m) = (9i64, 2i64);
    let weight = family_highest_weight(d, m, &idx).unwrap();
    c.bench_function("closed_form_d9", |b| {
        b.iter(|| family_multiplicity(d, m, black_box(&idx)).unwrap())
    });
    c.bench_function("weyl_dim_d9", |b| {
        b.iter(|| weyl_dim(d as usize, black_box(&weight)).unwrap())
    });
}

criterion_group!(benches, line_bundle, normal, multiplicity_routes);
criterion_main!(benches);
