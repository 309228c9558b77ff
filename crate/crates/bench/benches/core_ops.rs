use criterion::{black_box, criterion_group, criterion_main, Criterion};
use nonarch_core::cheese::classicalise;
use nonarch_core::galois::{FieldId, GaloisAut};
use nonarch_core::gen::{random_cheese, rng};
use nonarch_core::geo::GeoCtx;
use nonarch_core::quadext::QuadExt;
use nonarch_core::reps::stable_reps;
use num_rational::BigRational;

fn bench_expand(c: &mut Criterion) {
    let half = BigRational::new(1.into(), 2.into());
    c.bench_function("padic_expand_half_prec32", |b| {
        b.iter(|| nonarch_core::expand(black_box(&half), 5, 32))
    });
}

fn bench_quad_mul(c: &mut Criterion) {
    let x = QuadExt::from_i64(12345, -678, 32);
    let y = QuadExt::from_i64(-9, 4321, 32);
    c.bench_function("quadext_mul_prec32", |b| b.iter(|| black_box(&x).mul(black_box(&y))));
}

fn bench_stable_reps(c: &mut Criterion) {
    let g = GaloisAut::generator(FieldId::Q5Sqrt2);
    c.bench_function("stable_reps_q5_sqrt2", |b| b.iter(|| stable_reps(black_box(&g), 32)));
}

fn bench_classicalise(c: &mut Criterion) {
    let ctx = GeoCtx::default();
    let cheese = random_cheese(&mut rng(5), 20);
    c.bench_function("classicalise_20_holes", |b| {
        b.iter(|| classicalise(black_box(&cheese), &ctx))
    });
}

criterion_group!(
    benches,
    bench_expand,
    bench_quad_mul,
    bench_stable_reps,
    bench_classicalise
);
criterion_main!(benches);
