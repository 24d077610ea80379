//! Compares the data-parallel sigma_min scan against its sequential twin,
//! and times a full spectrum search end to end.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use weylbox::algebra::{build_unitary, Axis, Chirality, UnitaryParams};
use weylbox::boundary::bc_weyl_axis;
use weylbox::spectral::{
    find_spectrum, sigma_min_profile, sigma_min_profile_seq, SpectralProblem,
};

fn make_problem() -> SpectralProblem {
    let params = UnitaryParams::new(0.7, [0.5, 0.5, -0.5, 0.5]).unwrap();
    let spec = bc_weyl_axis(Axis::Y, &build_unitary(&params)).unwrap();
    SpectralProblem::new(spec, 1.0, Chirality::Right).unwrap()
}

fn bench_profile(c: &mut Criterion) {
    let prob = make_problem();
    let mut group = c.benchmark_group("sigma_min_profile");
    for n in [1_000usize, 20_000] {
        let ks: Vec<f64> = (0..n).map(|i| -40.0 + 80.0 * i as f64 / n as f64).collect();
        group.bench_with_input(BenchmarkId::new("dispatched", n), &ks, |b, ks| {
            b.iter(|| sigma_min_profile(black_box(&prob), black_box(ks)))
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &ks, |b, ks| {
            b.iter(|| sigma_min_profile_seq(black_box(&prob), black_box(ks)))
        });
    }
    group.finish();
}

fn bench_find_spectrum(c: &mut Criterion) {
    let prob = make_problem();
    let mut group = c.benchmark_group("find_spectrum");
    group.sample_size(20);
    group.bench_function("window_40", |b| {
        b.iter(|| find_spectrum(black_box(&prob), -20.0, 20.0).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_profile, bench_find_spectrum);
criterion_main!(benches);
