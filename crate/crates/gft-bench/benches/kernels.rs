//! Benchmarks for the three kernels everything else leans on: the scalar
//! root solver, the circle-supremum scan, and the quadrature paths (line
//! segments and the tensor-product double integral).

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;

use gft_core::{
    build_double_integral_fn, omega_functional, radius_catalog, segment_integral,
    smallest_positive_root, sup_on_circle, AnalyticMap, ClassParams, Condition, DiskGrid,
    raw_polynomial,
};

fn bench_root_solver(c: &mut Criterion) {
    let problems = radius_catalog();
    let polynomial = &problems[0]; // R1: a degree-12 polynomial equation
    let transcendental = &problems[5]; // R6: exponential-of-exponential

    c.bench_function("root/polynomial", |b| {
        b.iter(|| {
            smallest_positive_root(black_box(polynomial.psi.as_ref()), 5e-3, 1e-12).unwrap()
        })
    });
    c.bench_function("root/transcendental", |b| {
        b.iter(|| {
            smallest_positive_root(black_box(transcendental.psi.as_ref()), 5e-3, 1e-12).unwrap()
        })
    });
}

fn bench_boundary_sup(c: &mut Criterion) {
    let koebe = AnalyticMap::koebe();
    let grid = DiskGrid::new(vec![0.5], 1024, 0.9).unwrap();

    c.bench_function("sup/omega_functional_1024", |b| {
        b.iter(|| sup_on_circle(|z| omega_functional(black_box(&koebe), z), 0.9, &grid).unwrap())
    });
}

fn bench_quadrature(c: &mut Criterion) {
    let target = Complex64::new(0.6, 0.3);
    c.bench_function("quad/segment_exp", |b| {
        b.iter(|| {
            segment_integral(
                &|t: Complex64| Ok(black_box(t).exp()),
                Complex64::new(0.0, 0.0),
                target,
                1e-12,
            )
            .unwrap()
        })
    });

    // Evaluation cost of a constructed member: each call is a full
    // tensor-product double integral.
    let g = raw_polynomial(vec![
        Complex64::new(0.05, 0.0),
        Complex64::new(0.02, 0.01),
        Complex64::new(-0.01, 0.0),
    ]);
    let params = ClassParams::new(0.25, 0.5, 1).unwrap();
    let f = build_double_integral_fn(&g, &params, Condition::First).unwrap();
    let z = Complex64::from_polar(0.8, 1.1);
    c.bench_function("quad/double_integral_eval", |b| {
        b.iter(|| f.eval(black_box(z)).unwrap())
    });
    c.bench_function("quad/double_integral_build", |b| {
        b.iter(|| build_double_integral_fn(black_box(&g), &params, Condition::First).unwrap())
    });
}

criterion_group!(kernels, bench_root_solver, bench_boundary_sup, bench_quadrature);
criterion_main!(kernels);
