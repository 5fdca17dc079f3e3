//! Benchmarks for the colouring engines and the transforms they lean on.
//!
//! Run with `cargo bench -p chromatica-bench`.

use std::hint::black_box;

use chromatica::transforms::{line_graph, trace_faces};
use chromatica::{
    backtracking_colour, dsatur_colour, generators, hea_colour, tabu_search, HeaParams, Seed,
};
use chromatica_bench::random_graph;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_heuristics(c: &mut Criterion) {
    let mut group = c.benchmark_group("dsatur");
    for n in [60, 120, 240] {
        let g = random_graph(n, 0.5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| dsatur_colour(black_box(g)))
        });
    }
    group.finish();

    let g = random_graph(40, 0.5);
    let start = dsatur_colour(&g);
    // aim one colour below the heuristic, folding the top class in to seed
    // the clash-repair search
    let k = start.k - 1;
    let squeezed: Vec<usize> = start.assignment.iter().map(|&l| l.min(k - 1)).collect();
    c.bench_function("tabu_search 5k iterations n=40", |b| {
        b.iter(|| tabu_search(black_box(&g), &squeezed, k, 5_000, Seed(3)))
    });
}

fn bench_exact(c: &mut Criterion) {
    let g = random_graph(25, 0.5);
    c.bench_function("backtracking exact n=25", |b| {
        b.iter(|| backtracking_colour(black_box(&g), None))
    });
}

fn bench_evolutionary(c: &mut Criterion) {
    let g = random_graph(40, 0.5);
    c.bench_function("hea n=40 budgeted", |b| {
        b.iter(|| {
            hea_colour(
                black_box(&g),
                &HeaParams {
                    tabu_iterations_per_offspring: 500,
                    stall_cycles: 5,
                    seed: Seed(11),
                    ..HeaParams::default()
                },
            )
        })
    });
}

fn bench_transforms(c: &mut Criterion) {
    let g = random_graph(120, 0.3);
    c.bench_function("line_graph n=120", |b| b.iter(|| line_graph(black_box(&g))));

    let eg = generators::sierpinski(5);
    let rot = chromatica::transforms::rotation_from_coordinates(&eg);
    c.bench_function("trace_faces sierpinski-5", |b| {
        b.iter(|| trace_faces(black_box(&eg.graph), black_box(&rot)))
    });
}

criterion_group!(
    benches,
    bench_heuristics,
    bench_exact,
    bench_evolutionary,
    bench_transforms
);
criterion_main!(benches);
