use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use charnum_core::bundle::{fiber_pontryagin, m4_model, RootSystemData, DEFAULT_CAP};
use charnum_core::genus::{ahat_class, l_class};
use charnum_core::lattice::{
    basis_numbers, conjecture_sweep, invariant_values, residue_min_valuation, sig_lambda2,
    SublatticeConstraint,
};
use charnum_core::qforms::witten_direct;
use charnum_core::twist::{ch_tangent, exterior_power, symmetric_power};

fn genera(c: &mut Criterion) {
    c.bench_function("ahat_class cap 6", |b| b.iter(|| ahat_class(black_box(6)).unwrap()));
    c.bench_function("l_class cap 6", |b| b.iter(|| l_class(black_box(6)).unwrap()));
}

fn twists(c: &mut Criterion) {
    let t = ch_tangent(24, 6).unwrap();
    c.bench_function("exterior_power 4 of T", |b| b.iter(|| exterior_power(black_box(4), &t).unwrap()));
    c.bench_function("symmetric_power 4 of T", |b| b.iter(|| symmetric_power(black_box(4), &t).unwrap()));
}

fn bundle(c: &mut Criterion) {
    let f4 = RootSystemData::f4_spin9();
    c.bench_function("F4 fiber class", |b| b.iter(|| fiber_pontryagin(&f4, DEFAULT_CAP).unwrap()));
    c.bench_function("M4 model", |b| b.iter(|| m4_model().unwrap()));
}

fn lattice(c: &mut Criterion) {
    let m1 = basis_numbers().unwrap()[0].clone();
    c.bench_function("Witten genus direct through q^2", |b| b.iter(|| witten_direct(&m1, 2).unwrap()));
    let values = invariant_values(sig_lambda2).unwrap();
    let cons = [SublatticeConstraint::p2_cubed(3, 6).unwrap()];
    c.bench_function("3-adic residue search, bound 2", |b| {
        b.iter(|| residue_min_valuation(&values, &cons, 3, black_box(2)).unwrap())
    });
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("max 5 mod 24", |b| b.iter(|| conjecture_sweep(5, 24).unwrap()));
    group.finish();
}

criterion_group!(benches, genera, twists, bundle, lattice);
criterion_main!(benches);
