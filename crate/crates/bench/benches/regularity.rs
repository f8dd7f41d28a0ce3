use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use monoreg::field::PrimeField;
use monoreg::torext::{tor_regularities, TorOptions};
use monoreg::verifier::{scan, CheckKind, ScanConfig};
use monoreg::{betti_table, is_weakly_stable, reg_weakly_stable_recursive, GradedModule};
use monoreg_bench::fixtures;

fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti");
    let f = PrimeField::new(32003).unwrap();
    for (name, i) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &i, |b, i| {
            b.iter(|| betti_table(&GradedModule::quotient_ring(f, i).unwrap()).unwrap())
        });
    }
    group.finish();
}

fn regularity_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("recursive");
    for (name, i) in fixtures().into_iter().filter(|(_, i)| is_weakly_stable(i)) {
        group.bench_with_input(BenchmarkId::from_parameter(name), &i, |b, i| {
            b.iter(|| reg_weakly_stable_recursive(i).unwrap())
        });
    }
    group.finish();
}

fn tor(c: &mut Criterion) {
    let mut group = c.benchmark_group("tor");
    let f = PrimeField::new(32003).unwrap();
    for (name, i) in fixtures().into_iter().filter(|(n, _)| *n != "rp2") {
        group.bench_with_input(BenchmarkId::from_parameter(name), &i, |b, i| {
            b.iter(|| tor_regularities(&f, i, i, &TorOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for kind in [CheckKind::TorBound, CheckKind::ExtBound] {
        let cfg = ScanConfig {
            count: 50,
            checks: vec![kind],
            ..ScanConfig::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(kind.name()), &cfg, |b, cfg| {
            b.iter(|| scan(cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, betti, regularity_routes, tor, scans);
criterion_main!(benches);
