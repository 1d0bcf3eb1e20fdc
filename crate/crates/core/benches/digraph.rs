//! Parallel-vs-sequential benchmarks for the digraph fan-out loops. The
//! concept-pair image computations are independent pure tasks, so the
//! comparison isolates the scheduling overhead against the win on the grid
//! fixtures. Run with `cargo bench -p dirhom`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use dirhom::digraph::{brute_force_digraph, homology_digraph};
use dirhom::models;
use dirhom::{Gf2, Mode};

fn modes() -> Vec<(&'static str, Mode)> {
    if cfg!(feature = "parallel") {
        vec![
            ("parallel", Mode::Parallel),
            ("sequential", Mode::Sequential),
        ]
    } else {
        vec![("sequential", Mode::Sequential)]
    }
}

fn bench_grid_digraph(c: &mut Criterion) {
    let mut group = c.benchmark_group("two_holes_digraph");
    group.sample_size(10);
    for resolution in [7usize, 9] {
        let model = models::two_holes_comparable(resolution).unwrap();
        for (name, mode) in modes() {
            group.bench_with_input(
                BenchmarkId::new(name, resolution),
                &model.space,
                |b, space| b.iter(|| homology_digraph(&Gf2, space, mode)),
            );
        }
    }
    group.finish();
}

fn bench_torus_digraph(c: &mut Criterion) {
    let mut group = c.benchmark_group("torus_digraph");
    let model = models::torus();
    for (name, mode) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| homology_digraph(&Gf2, &model.space, mode))
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force_wedge");
    group.sample_size(10);
    let model = models::circle_wedge();
    for (name, mode) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| brute_force_digraph(&Gf2, &model.space, None, 10, mode).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_grid_digraph,
    bench_torus_digraph,
    bench_oracle
);
criterion_main!(benches);
