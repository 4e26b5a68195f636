//! Compares the data-parallel kernels (graph powers, girth, colouring
//! verification) on the default rayon pool, a single-thread pool, and a
//! hand-rolled sequential baseline built from the public BFS API.

use criterion::{criterion_group, criterion_main, Criterion};

use distchroma::colouring::{contraction_pipeline_edge_colour, verify_distance_colouring};
use distchroma::constructions::shannon_hierarchy;
use distchroma::graph::SimpleGraph;

fn one_thread_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool")
}

/// Power assembled one source at a time from full BFS sweeps; no thread
/// pool involved.
fn sequential_power(s: &SimpleGraph, t: usize) -> Vec<Vec<usize>> {
    (0..s.num_vertices())
        .map(|v| {
            s.distances(v)
                .expect("vertex in range")
                .iter()
                .enumerate()
                .filter(|&(w, d)| w != v && matches!(d, Some(dd) if *dd <= t))
                .map(|(w, _)| w)
                .collect()
        })
        .collect()
}

fn bench_power(c: &mut Criterion) {
    let g = shannon_hierarchy(2, 8);
    let s = g.underlying_simple();
    let pool = one_thread_pool();
    let mut group = c.benchmark_group("power_t4");
    group.sample_size(10);
    group.bench_function("default-pool", |b| b.iter(|| s.power(4)));
    group.bench_function("one-thread-pool", |b| b.iter(|| pool.install(|| s.power(4))));
    group.bench_function("sequential-baseline", |b| b.iter(|| sequential_power(&s, 4)));
    group.finish();
}

fn bench_girth(c: &mut Criterion) {
    let g = shannon_hierarchy(2, 8);
    let pool = one_thread_pool();
    let mut group = c.benchmark_group("girth");
    group.sample_size(10);
    group.bench_function("default-pool", |b| b.iter(|| g.girth()));
    group.bench_function("one-thread-pool", |b| b.iter(|| pool.install(|| g.girth())));
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let g = shannon_hierarchy(2, 8);
    let colouring = contraction_pipeline_edge_colour(&g, 2);
    let pool = one_thread_pool();
    let mut group = c.benchmark_group("verify_t2");
    group.sample_size(10);
    group.bench_function("default-pool", |b| {
        b.iter(|| verify_distance_colouring(&g, &colouring).unwrap())
    });
    group.bench_function("one-thread-pool", |b| {
        b.iter(|| pool.install(|| verify_distance_colouring(&g, &colouring).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, bench_power, bench_girth, bench_verify);
criterion_main!(benches);
