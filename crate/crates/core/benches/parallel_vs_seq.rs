//! Compares the data-parallel reduction path against the sequential one on
//! the workloads that dominate a registry run: long trigonometric direct
//! sums, batched coefficient quadrature, and identity evaluation.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use loggamma::identities::{evaluate, registry, RunParams};
use loggamma::quadrature::{integrate_with, Integrand};
use loggamma::reduce::{map_collect_par, map_collect_seq, sum_range_par, sum_range_seq};
use loggamma::specfun::ln_gamma;

const TWO_PI: f64 = std::f64::consts::TAU;

fn logcos_term(n: u64) -> f64 {
    let x = 0.3_f64;
    let nf = n as f64;
    let m = nf * x;
    nf.ln() / (nf * nf) * (TWO_PI * (m - m.floor())).cos()
}

fn bench_blocked_sum(c: &mut Criterion) {
    let mut group = c.benchmark_group("logcos_direct_sum_1e6");
    group.sample_size(20);
    group.bench_function("seq", |b| {
        b.iter(|| black_box(sum_range_seq(2, 1_000_001, logcos_term)))
    });
    group.bench_function("par", |b| {
        b.iter(|| black_box(sum_range_par(2, 1_000_001, logcos_term)))
    });
    group.finish();
}

fn coeff_b(k: usize) -> f64 {
    let kf = k as f64;
    let f = Integrand::new(0.0, 1.0, move |t: f64| {
        ln_gamma(t).unwrap() * (TWO_PI * kf * t).sin()
    })
    .unwrap()
    .singular_lower();
    integrate_with(&f, 1e-11, 2_000_000).unwrap().value
}

fn bench_coefficient_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("sine_coefficients_k1_16");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| black_box(map_collect_seq(16, |i| coeff_b(i + 1))))
    });
    group.bench_function("par", |b| {
        b.iter(|| black_box(map_collect_par(16, |i| coeff_b(i + 1))))
    });
    group.finish();
}

fn bench_identity_evaluation(c: &mut Criterion) {
    let specs = registry();
    let fast: Vec<_> = ["L1", "T3", "K1", "RK", "G2"]
        .iter()
        .map(|id| {
            specs
                .iter()
                .position(|s| &s.id == id)
                .expect("registry id present")
        })
        .collect();
    let params = RunParams::default();

    let mut group = c.benchmark_group("identity_subset");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter_batched(
            || (),
            |()| {
                let out = map_collect_seq(fast.len(), |i| evaluate(&specs[fast[i]], &params));
                black_box(out)
            },
            BatchSize::SmallInput,
        )
    });
    group.bench_function("par", |b| {
        b.iter_batched(
            || (),
            |()| {
                let out = map_collect_par(fast.len(), |i| evaluate(&specs[fast[i]], &params));
                black_box(out)
            },
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_blocked_sum,
    bench_coefficient_batch,
    bench_identity_evaluation
);
criterion_main!(benches);
