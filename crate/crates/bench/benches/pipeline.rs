use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use littleweyl::report::{run_pipeline, Options};
use littleweyl::spherical::find_admissible;
use littleweyl::weyl::{little_weyl_group, weyl_from_limits, DEFAULT_MAX_ORDER};
use littleweyl::{Space, SphericalAnalysis};

const ENTRIES: [&str; 4] = ["A1_so2", "A2_so3", "B2_k", "G2_k"];

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    for name in ENTRIES {
        let space = Space::resolve(name).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &space, |b, s| {
            b.iter(|| run_pipeline(black_box(s), &Options::default()).unwrap())
        });
    }
    group.finish();
}

fn stages(c: &mut Criterion) {
    let mut group = c.benchmark_group("stages");
    group.sample_size(10);
    for name in ENTRIES {
        let space = Space::resolve(name).unwrap();
        let g = &space.g;
        group.bench_function(BenchmarkId::new("analysis", name), |b| {
            b.iter(|| SphericalAnalysis::new(g, black_box(&space.point.h_z)).unwrap())
        });
        let search = find_admissible(g, &space.point, 0, 10).unwrap();
        let an = SphericalAnalysis::new(g, &search.point.h_z).unwrap();
        group.bench_function(BenchmarkId::new("cone", name), |b| b.iter(|| an.compression_cone(g)));
        group.bench_function(BenchmarkId::new("walls", name), |b| {
            b.iter(|| little_weyl_group(g, &an, DEFAULT_MAX_ORDER).unwrap())
        });
        group.bench_function(BenchmarkId::new("limits", name), |b| {
            b.iter(|| weyl_from_limits(g, &an, Default::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, pipeline, stages);
criterion_main!(benches);
