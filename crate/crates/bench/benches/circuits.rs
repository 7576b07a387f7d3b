use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qtrig_core::reference::oracle_product;
use qtrig_core::{apply_transform, circuit_unitary, variant_circuit, TransformKind, Variant};

fn synthesis(c: &mut Criterion) {
    let mut group = c.benchmark_group("synthesis");
    for n in [4u32, 8, 12, 16] {
        group.bench_with_input(BenchmarkId::new("variant_iv", n), &n, |b, &n| {
            b.iter(|| variant_circuit(Variant::IV, black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn apply(c: &mut Criterion) {
    let mut group = c.benchmark_group("apply_transform");
    for kind in TransformKind::ALL {
        let n = 10;
        let x: Vec<f64> = (0..kind.size(n))
            .map(|i| ((i * 7919) % 101) as f64 - 50.0)
            .collect();
        group.bench_with_input(BenchmarkId::new(kind.name(), n), &x, |b, x| {
            b.iter(|| apply_transform(kind, black_box(x)).unwrap())
        });
    }
    group.finish();
}

fn unitary(c: &mut Criterion) {
    let mut group = c.benchmark_group("circuit_unitary");
    group.sample_size(10);
    for n in [4u32, 6, 8] {
        let circuit = variant_circuit(Variant::II, n).unwrap();
        group.bench_with_input(BenchmarkId::new("variant_ii", n), &circuit, |b, circuit| {
            b.iter(|| circuit_unitary(black_box(circuit)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_product");
    group.sample_size(10);
    for n in [4u32, 6, 8] {
        group.bench_with_input(BenchmarkId::new("variant_iv", n), &n, |b, &n| {
            b.iter(|| oracle_product(Variant::IV, black_box(n)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, synthesis, apply, unitary, oracle);
criterion_main!(benches);
