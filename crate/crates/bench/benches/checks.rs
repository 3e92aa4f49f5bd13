use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use fmcheck_core::fstructure::{
    check_structure_identity, family1, family2, multiplication_from_ideal, spectral_cover_ideal, spectral_radical,
};
use fmcheck_core::groebner::{buchberger, GroebnerConfig};
use fmcheck_core::point_algebra::{fiber_algebra, nilpotency_profile};
use fmcheck_core::poisson::ideal_poisson_stable;
use fmcheck_core::{rat, Polynomial, VariableSet};

fn family1_n3() -> fmcheck_core::fstructure::ExampleFamily {
    let vars = VariableSet::new(3);
    family1(3, &[Polynomial::one(vars), Polynomial::t(vars, 3), Polynomial::zero(vars)]).unwrap()
}

fn groebner(c: &mut Criterion) {
    let cfg = GroebnerConfig::default();
    let f1 = family1_n3();
    c.bench_function("buchberger family1 n=3", |b| b.iter(|| buchberger(black_box(f1.ideal()), &cfg).unwrap()));
    let f2 = family2(4).unwrap();
    c.bench_function("buchberger family2 n=4", |b| b.iter(|| buchberger(black_box(f2.ideal()), &cfg).unwrap()));
}

fn stability(c: &mut Criterion) {
    let cfg = GroebnerConfig::default();
    let f1 = family1_n3();
    c.bench_function("poisson stable family1 n=3", |b| b.iter(|| ideal_poisson_stable(black_box(f1.ideal()), &cfg).unwrap()));
    c.bench_function("poisson stable radical family1 n=3", |b| {
        b.iter(|| ideal_poisson_stable(black_box(f1.stated_radical()), &cfg).unwrap())
    });
    let f2 = family2(4).unwrap();
    c.bench_function("poisson stable family2 n=4", |b| b.iter(|| ideal_poisson_stable(black_box(f2.ideal()), &cfg).unwrap()));
}

fn routes(c: &mut Criterion) {
    let cfg = GroebnerConfig::default();
    let f2 = family2(4).unwrap();
    let m = multiplication_from_ideal(f2.ideal(), 4, &cfg).unwrap();
    c.bench_function("identity route family2 n=4", |b| b.iter(|| check_structure_identity(black_box(&m))));
    c.bench_function("spectral route family2 n=4", |b| {
        b.iter(|| ideal_poisson_stable(&spectral_cover_ideal(black_box(&m)), &cfg).unwrap())
    });
    c.bench_function("trace radical family2 n=4", |b| b.iter(|| spectral_radical(black_box(&m), &cfg).unwrap()));
    let t0 = vec![rat(1, 1), rat(-2, 3), rat(3, 1), rat(1, 2)];
    c.bench_function("fiber algebra family2 n=4", |b| {
        b.iter(|| nilpotency_profile(&fiber_algebra(black_box(&m), &t0).unwrap()).unwrap())
    });
}

criterion_group!(benches, groebner, stability, routes);
criterion_main!(benches);
