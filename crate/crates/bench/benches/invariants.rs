//! Benchmarks for the pipeline stages that dominate an audit: point
//! enumeration, the order sequence, per-point local analysis, and the
//! full report assembly.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use maxcurve_core::{
    analyze_point, assemble_report, hermitian_curve, recognize_hermitian, FunctionField,
    PlaneCurve,
};

fn curve_q3() -> PlaneCurve {
    hermitian_curve(3).unwrap()
}

fn bench_rational_points(c: &mut Criterion) {
    c.bench_function("rational_points/hermitian-q3", |b| {
        // Points are cached inside PlaneCurve, so rebuild per iteration.
        b.iter(|| {
            let curve = curve_q3();
            black_box(curve.rational_points().len())
        })
    });
}

fn bench_order_sequence(c: &mut Criterion) {
    let curve = curve_q3();
    c.bench_function("order_sequence/hermitian-q3", |b| {
        b.iter(|| {
            let k = FunctionField::new(&curve).unwrap();
            black_box(k.order_sequence().unwrap())
        })
    });
}

fn bench_point_analysis(c: &mut Criterion) {
    let curve = curve_q3();
    let k = FunctionField::new(&curve).unwrap();
    let eps = k.order_sequence().unwrap();
    let nu1 = k.frobenius_order(eps.2);
    let p = curve.rational_points()[0].clone();
    c.bench_function("analyze_point/hermitian-q3", |b| {
        b.iter(|| black_box(analyze_point(&curve, &p, eps, nu1, true).unwrap()))
    });
}

fn bench_full_audit(c: &mut Criterion) {
    let curve = curve_q3();
    c.bench_function("assemble_report/hermitian-q3", |b| {
        b.iter(|| black_box(assemble_report(&curve).unwrap()))
    });
}

fn bench_recognition(c: &mut Criterion) {
    let curve = curve_q3();
    c.bench_function("recognize_hermitian/hermitian-q3", |b| {
        b.iter(|| black_box(recognize_hermitian(&curve).is_hermitian()))
    });
}

criterion_group!(
    benches,
    bench_rational_points,
    bench_order_sequence,
    bench_point_analysis,
    bench_full_audit,
    bench_recognition
);
criterion_main!(benches);
