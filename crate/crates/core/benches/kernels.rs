//! Criterion benchmarks for the exact-arithmetic kernels, labelled by the
//! execution mode so runs with and without the `parallel` feature can be
//! compared:
//!
//! ```bash
//! cargo bench -p exceptional-core
//! cargo bench -p exceptional-core --no-default-features
//! ```

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use exceptional_core::groups::GroupName;
use exceptional_core::{liealg, AlgMap, Ctx, Named, Space};

#[cfg(feature = "parallel")]
const MODE: &str = "parallel";
#[cfg(not(feature = "parallel"))]
const MODE: &str = "sequential";

fn bench_membership(c: &mut Criterion) {
    let ctx = Ctx::default36();
    // warm the cached tables outside the timing loop
    let _ = liealg::basis(&ctx, GroupName::G2);
    let sigma3 = AlgMap::named(Named::Sigma3, Space::Jordan27, &ctx);
    let mut group = c.benchmark_group("membership");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("is_f4_sigma3", MODE), |b| {
        b.iter(|| {
            // clone drops the cached certificate, forcing a full check
            let fresh = std::hint::black_box(sigma3.clone());
            let fresh = AlgMap::from_matrix(Space::Jordan27, fresh.mat);
            assert!(fresh.is_f4());
        })
    });
    let mu3 = AlgMap::named(Named::Mu3, Space::Jordan27, &ctx);
    group.bench_function(BenchmarkId::new("is_e6_mu3", MODE), |b| {
        b.iter(|| {
            let fresh = std::hint::black_box(mu3.clone());
            let fresh = AlgMap::from_matrix(Space::Jordan27, fresh.mat);
            assert!(fresh.is_e6());
        })
    });
    group.finish();
}

fn bench_fixed_dim(c: &mut Criterion) {
    let ctx = Ctx::default36();
    let g2 = liealg::basis(&ctx, GroupName::G2);
    let gamma3 = AlgMap::named(Named::Gamma3, Space::Cayley8, &ctx);
    let w3 = AlgMap::named(Named::W3, Space::Cayley8, &ctx);
    let mut group = c.benchmark_group("fixed_dim");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("g2_joint", MODE), |b| {
        b.iter(|| {
            let d = liealg::fixed_dim(&g2, &[&gamma3, &w3]).unwrap();
            assert_eq!(d, 2);
        })
    });
    let f4 = liealg::basis(&ctx, GroupName::F4);
    let sigma3 = AlgMap::named(Named::Sigma3, Space::Jordan27, &ctx);
    group.bench_function(BenchmarkId::new("f4_sigma3", MODE), |b| {
        b.iter(|| {
            let d = liealg::fixed_dim(&f4, &[&sigma3]).unwrap();
            assert_eq!(d, 22);
        })
    });
    group.finish();
}

criterion_group!(benches, bench_membership, bench_fixed_dim);
criterion_main!(benches);
