//! Sequential vs parallel campaign and grid-enumeration throughput.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cheb_core::campaign::{run_campaign, Mode, VerifyConfig};
use cheb_core::oracle::{enumerate_and_verify, GridSpec, DEFAULT_CAP};
use cheb_core::{Exec, PropertyId, Rat, Scalar};

fn execs() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn bench_float_campaign(c: &mut Criterion) {
    let mut group = c.benchmark_group("float_campaign_a6");
    for (name, exec) in execs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                let mut cfg = VerifyConfig::new(PropertyId::A6, Mode::Float, 500, 42);
                cfg.exec = exec;
                run_campaign(&cfg).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_exact_campaign(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_campaign_identity");
    for (name, exec) in execs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                let mut cfg =
                    VerifyConfig::new(PropertyId::IdentityEquiv, Mode::Exact, 200, 42);
                cfg.exec = exec;
                run_campaign(&cfg).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_grid_enumeration(c: &mut Criterion) {
    let values: Vec<Rat> = [-1i64, 0, 1].iter().map(|&v| Rat::from_i64(v)).collect();
    let weights: Vec<Rat> = [1i64, 2].iter().map(|&v| Rat::from_i64(v)).collect();
    let mut group = c.benchmark_group("grid_sign_n3");
    group.sample_size(10);
    for (name, exec) in execs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                let spec = GridSpec {
                    n: 3,
                    values: values.clone(),
                    weights: weights.clone(),
                    cap: DEFAULT_CAP,
                };
                enumerate_and_verify(&spec, PropertyId::A2, false, exec).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_float_campaign,
    bench_exact_campaign,
    bench_grid_enumeration
);
criterion_main!(benches);
