use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use subpoly_core::duality::dst_separate;
use subpoly_core::extensions::{concave_ext_exact, lovasz, multilinear_exact};
use subpoly_core::lower::greedy_vertex;
use subpoly_core::minimize::{sfm_brute, sfm_minnorm};
use subpoly_core::upper::{member_superdiff, member_superdiff_outer, supergradient, SupergradientVariant};
use subpoly_core::zoo::{random_cube_point, random_permutation, random_submodular, random_supermodular_below};
use subpoly_core::{SetFunction, Subset};

fn instance(n: usize, seed: u64) -> SetFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_submodular(n, &mut rng).tabulate().unwrap()
}

fn lower(c: &mut Criterion) {
    let mut g = c.benchmark_group("lower");
    for n in [8, 16, 20] {
        let f = instance(n, 1);
        let sigma = random_permutation(n, &mut ChaCha8Rng::seed_from_u64(2));
        g.bench_with_input(BenchmarkId::new("greedy_vertex", n), &n, |b, _| {
            b.iter(|| greedy_vertex(black_box(&f), &sigma))
        });
    }
    g.finish();
}

fn minimize(c: &mut Criterion) {
    let mut g = c.benchmark_group("minimize");
    g.sample_size(20);
    for n in [8, 12, 16] {
        let f = instance(n, 3);
        g.bench_with_input(BenchmarkId::new("brute", n), &n, |b, _| b.iter(|| sfm_brute(black_box(&f))));
        g.bench_with_input(BenchmarkId::new("minnorm", n), &n, |b, _| b.iter(|| sfm_minnorm(black_box(&f))));
    }
    g.finish();
}

fn superdiff(c: &mut Criterion) {
    let mut g = c.benchmark_group("superdiff");
    for n in [8, 12, 16] {
        let f = instance(n, 4);
        let x = Subset((1 << (n / 2)) - 1);
        let p = supergradient(&f, x, SupergradientVariant::Bar);
        g.bench_with_input(BenchmarkId::new("exhaustive", n), &n, |b, _| {
            b.iter(|| member_superdiff(black_box(&f), x, &p, 1e-8))
        });
        g.bench_with_input(BenchmarkId::new("outer_2_2", n), &n, |b, _| {
            b.iter(|| member_superdiff_outer(black_box(&f), x, &p, 2, 2, 1e-8))
        });
    }
    g.finish();
}

fn extensions(c: &mut Criterion) {
    let mut g = c.benchmark_group("extensions");
    for n in [4, 8] {
        let f = instance(n, 5);
        let w = random_cube_point(n, &mut ChaCha8Rng::seed_from_u64(6));
        g.bench_with_input(BenchmarkId::new("lovasz", n), &n, |b, _| b.iter(|| lovasz(black_box(&f), &w)));
        g.bench_with_input(BenchmarkId::new("multilinear", n), &n, |b, _| {
            b.iter(|| multilinear_exact(black_box(&f), &w))
        });
        g.bench_with_input(BenchmarkId::new("concave_exact", n), &n, |b, _| {
            b.iter(|| concave_ext_exact(black_box(&f), &w))
        });
    }
    g.finish();
}

fn separation(c: &mut Criterion) {
    let mut g = c.benchmark_group("separation");
    g.sample_size(20);
    for n in [6, 10] {
        let f = instance(n, 7);
        let low = random_supermodular_below(&f, &mut ChaCha8Rng::seed_from_u64(8));
        g.bench_with_input(BenchmarkId::new("dst", n), &n, |b, _| {
            b.iter(|| dst_separate(black_box(&f), &low, 1e-8))
        });
    }
    g.finish();
}

criterion_group!(benches, lower, minimize, superdiff, extensions, separation);
criterion_main!(benches);
