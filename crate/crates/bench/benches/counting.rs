use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use htsasm::asm;
use htsasm::identities::{sum_wgt, sum_wgt_enumerated, WeightScheme, WeightTable};
use htsasm::paths::verify_pdet;
use htsasm::{AsmKind, Limits, StrictPartition};

fn shape(parts: &[u32]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for parts in [&[3, 2, 1][..], &[5, 3, 1], &[6, 4, 2, 1]] {
        let lambda = shape(parts);
        g.bench_with_input(BenchmarkId::from_parameter(&lambda), &lambda, |b, l| {
            b.iter(|| asm::enumerate(AsmKind::OddBPrime, black_box(l), &Limits::default()).unwrap().len())
        });
    }
    g.finish();
}

fn weighted_sum(c: &mut Criterion) {
    let mut g = c.benchmark_group("sum_wgt");
    let lambda = shape(&[4, 2, 1]);
    let table = WeightTable::new(WeightScheme::ALL[0], 3);
    g.bench_function("transfer", |b| b.iter(|| sum_wgt(&table, black_box(&lambda), &Limits::default()).unwrap()));
    g.bench_function("enumerated", |b| {
        b.iter(|| sum_wgt_enumerated(&table, black_box(&lambda), &Limits::default()).unwrap())
    });
    g.finish();
}

fn path_determinant(c: &mut Criterion) {
    let lambda = shape(&[4, 2, 1]);
    c.bench_function("verify_pdet 421", |b| b.iter(|| verify_pdet(black_box(&lambda)).unwrap()));
}

criterion_group!(benches, enumerate, weighted_sum, path_determinant);
criterion_main!(benches);
