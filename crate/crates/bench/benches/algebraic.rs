use cogrowth_core::algebraic::build_g_poly;
use cogrowth_core::rates::{g_poly_at_q1, rate_discriminant};
use cogrowth_core::resultant::discriminant;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_g_poly");
    group.sample_size(10);
    for n in [2u64, 4, 6] {
        group.bench_function(format!("N={n}"), |b| {
            b.iter(|| build_g_poly(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn discriminants(c: &mut Criterion) {
    let p = g_poly_at_q1(5).unwrap();
    c.bench_function("discriminant N=5 at q=1", |b| {
        b.iter(|| discriminant(black_box(&p)).unwrap())
    });
    let mut group = c.benchmark_group("rate_discriminant");
    group.sample_size(10);
    for n in [2u64, 5] {
        group.bench_function(format!("N={n}"), |b| {
            b.iter(|| rate_discriminant(black_box(n)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, construction, discriminants);
criterion_main!(benches);
