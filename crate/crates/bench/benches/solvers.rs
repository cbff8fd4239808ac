use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use temporient::complete::solve_ttc_oriented;
use temporient::recognize::{recognize_strong, recognize_tto};
use temporient::verify::Variant;
use temporient_bench::{random_orientation, random_temporal_graph};

fn bench_recognize(c: &mut Criterion) {
    let mut group = c.benchmark_group("recognize_tto");
    for (n, m) in [(50, 250), (100, 800), (200, 2000)] {
        let g = random_temporal_graph(n, m, 4, 7);
        group.bench_function(BenchmarkId::from_parameter(format!("n{}_m{}", n, m)), |b| {
            b.iter(|| recognize_tto(&g))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("recognize_strong");
    for (n, m) in [(100, 800), (200, 2000)] {
        let g = random_temporal_graph(n, m, 4, 11);
        group.bench_function(BenchmarkId::from_parameter(format!("n{}_m{}", n, m)), |b| {
            b.iter(|| recognize_strong(&g, Variant::Strong))
        });
    }
    group.finish();
}

fn bench_completion(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_ttc_oriented");
    for (n, m) in [(60, 400), (85, 800), (120, 1600)] {
        let g = random_temporal_graph(n, m, 4, 23);
        let f = random_orientation(&g, 29);
        group.bench_function(BenchmarkId::from_parameter(format!("n{}_m{}", n, m)), |b| {
            b.iter(|| solve_ttc_oriented(&g, &f, 3, Variant::Tto))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_recognize, bench_completion);
criterion_main!(benches);
