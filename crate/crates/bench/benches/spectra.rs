//! Weight-spectrum throughput: message enumeration vs hyperplane
//! characters, geometry construction, and the randomized search loop.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use mws_core::code::{weights_exhaustive, GeneratorMatrix, ProjectiveMultiset};
use mws_core::constructions::{binary_full_spectrum, hyperplane_index_sum, powers_of_two};
use mws_core::field::FieldSpec;
use mws_core::geometry::ProjectiveSpace;
use mws_core::search::{search_mws, SearchConfig, SearchMode};

fn bench_weight_algorithms(c: &mut Criterion) {
    let mut group = c.benchmark_group("weights");
    for k in [4u32, 7, 10] {
        let g = binary_full_spectrum(k).unwrap();
        group.bench_with_input(BenchmarkId::new("exhaustive_bk", k), &g, |b, g| {
            b.iter(|| weights_exhaustive(black_box(g)).unwrap())
        });
        let m = ProjectiveMultiset::from_matrix(&g).unwrap();
        group.bench_with_input(BenchmarkId::new("projective_bk", k), &m, |b, m| {
            b.iter(|| black_box(m).weight_distribution().unwrap())
        });
    }
    group.finish();
}

fn bench_geometry(c: &mut Criterion) {
    let mut group = c.benchmark_group("pg_build");
    for (q, k) in [(2u64, 8u32), (3, 5), (5, 4)] {
        group.bench_function(BenchmarkId::new("build", format!("q{q}_k{k}")), |b| {
            let field = FieldSpec::of_order(q).unwrap();
            b.iter(|| ProjectiveSpace::build(black_box(field.clone()), k).unwrap())
        });
    }
    group.finish();
}

fn bench_constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    group.bench_function("hsum_q3_k3", |b| {
        let field = FieldSpec::of_order(3).unwrap();
        b.iter(|| hyperplane_index_sum(black_box(&field), 3).unwrap())
    });
    group.bench_function("pow2_q3_k3_spectrum", |b| {
        let field = FieldSpec::of_order(3).unwrap();
        let m = powers_of_two(&field, 3, None).unwrap();
        b.iter(|| black_box(&m).weight_distribution().unwrap())
    });
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(20);
    group.bench_function("randomized_32_3_3", |b| {
        let cfg = SearchConfig {
            field: FieldSpec::of_order(3).unwrap(),
            k: 3,
            n: 32,
            seed: 1,
            max_iters: 1_000_000,
            mode: SearchMode::Randomized,
        };
        b.iter(|| search_mws(black_box(&cfg)).unwrap())
    });
    group.bench_function("exhaustive_7_2_3", |b| {
        let cfg = SearchConfig {
            field: FieldSpec::of_order(2).unwrap(),
            k: 3,
            n: 7,
            seed: 0,
            max_iters: 0,
            mode: SearchMode::Exhaustive,
        };
        b.iter(|| search_mws(black_box(&cfg)).unwrap())
    });
    group.finish();
}

fn bench_conversions(c: &mut Criterion) {
    let g = binary_full_spectrum(8).unwrap();
    c.bench_function("multiset_from_matrix_bk8", |b| {
        b.iter(|| ProjectiveMultiset::from_matrix(black_box(&g)).unwrap())
    });
    let m = ProjectiveMultiset::from_matrix(&g).unwrap();
    c.bench_function("matrix_from_multiset_bk8", |b| {
        b.iter(|| GeneratorMatrix::from_multiset(black_box(&m)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_weight_algorithms,
    bench_geometry,
    bench_constructions,
    bench_search,
    bench_conversions
);
criterion_main!(benches);
