use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use umbra_core::algebra::factorial_rat;
use umbra_core::barnes::{bb_number_multinomial, bb_number_umbral, bb_series, BarnesContext};
use umbra_core::identities::check_main_identity;

fn number_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("bb_number");
    for n in [2usize, 3] {
        let ctx = BarnesContext::symbolic(n).expect("positive arity");
        let k = 10u32;
        group.bench_with_input(BenchmarkId::new("umbral", n), &ctx, |b, ctx| {
            b.iter(|| bb_number_umbral(black_box(k), ctx))
        });
        group.bench_with_input(BenchmarkId::new("multinomial", n), &ctx, |b, ctx| {
            b.iter(|| bb_number_multinomial(black_box(k), ctx))
        });
        group.bench_with_input(BenchmarkId::new("series", n), &ctx, |b, ctx| {
            b.iter(|| {
                bb_series(ctx, black_box(k) as usize)
                    .coeff(k as usize)
                    .scale(&factorial_rat(k as usize))
            })
        });
    }
    group.finish();
}

fn identity_check(c: &mut Criterion) {
    c.bench_function("main_identity m=5 n=4", |b| {
        b.iter(|| check_main_identity(black_box(5), black_box(4)).expect("valid case"))
    });
}

criterion_group!(benches, number_routes, identity_check);
criterion_main!(benches);
