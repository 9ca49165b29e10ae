use criterion::{criterion_group, criterion_main, Criterion};
use homlat_bench::{fig_poset, grid_poset};
use homlat_core::algebra::congruence_lattice;
use homlat_core::hom::{count_homs, find_hom};
use homlat_core::homlat::verify_roundtrip;
use homlat_core::order::{add_top, covering_forest, downsets, sharp};
use homlat_core::synth::{graph_star, pentagon_algebra, synthesize_quasiprimal, Digraph};
use homlat_core::Budget;
use std::hint::black_box;

fn bench_covering_forest(c: &mut Criterion) {
    let budget = Budget::default();
    let psharp = sharp(&add_top(&fig_poset())).unwrap();
    c.bench_function("covering_forest/fig-sharp", |b| {
        b.iter(|| covering_forest(black_box(&psharp), &budget).unwrap())
    });
}

fn bench_downsets(c: &mut Criterion) {
    let budget = Budget::default();
    let grid = grid_poset(8, 8);
    c.bench_function("downsets/grid-8x8", |b| {
        b.iter(|| downsets(black_box(&grid), &budget).unwrap().len())
    });
}

fn bench_hom_search(c: &mut Criterion) {
    let budget = Budget::default();
    let q = synthesize_quasiprimal(&fig_poset(), &budget).unwrap().q;
    c.bench_function("find_hom/q16-self", |b| {
        b.iter(|| find_hom(black_box(&q), black_box(&q)).unwrap().is_some())
    });

    let g = graph_star(&Digraph::new(3, vec![(0, 0), (0, 1), (1, 2), (2, 1)]));
    let h = graph_star(&Digraph::new(3, vec![(0, 1), (1, 0), (1, 2), (2, 2)]));
    c.bench_function("count_homs/arrow-3v", |b| {
        b.iter(|| count_homs(black_box(&g), black_box(&h)).unwrap())
    });
}

fn bench_congruences(c: &mut Criterion) {
    let budget = Budget::default();
    let pentagon = pentagon_algebra();
    c.bench_function("congruence_lattice/pentagon", |b| {
        b.iter(|| congruence_lattice(black_box(&pentagon), &budget).unwrap().0.len())
    });
}

fn bench_roundtrip(c: &mut Criterion) {
    let budget = Budget::default();
    let p = fig_poset();
    let mut group = c.benchmark_group("roundtrip");
    group.sample_size(10);
    group.bench_function("fig-poset", |b| {
        b.iter(|| verify_roundtrip(black_box(&p), &budget).unwrap().passed())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_covering_forest,
    bench_downsets,
    bench_hom_search,
    bench_congruences,
    bench_roundtrip
);
criterion_main!(benches);
