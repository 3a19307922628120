use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use nashjet_bench::{fixture, tn_generators};
use nashjet_core::derivations::negative_derivation_scan;
use nashjet_core::jacobian::bareiss_determinant;
use nashjet_core::{build_jacobian, groebner_basis, maximal_minors, quotient_basis, MonomialOrder, Variant};

fn minors(c: &mut Criterion) {
    let mut g = c.benchmark_group("maximal_minors");
    for (name, poly, w, n) in [
        ("D4_n3", "x^3+y^3", &[1u32, 1][..], 3u32),
        ("E6_n3", "x^3+y^4", &[4, 3], 3),
        ("P8_n2", "x^3+y^3+z^3", &[1, 1, 1], 2),
    ] {
        let (f, _) = fixture(poly, w);
        let j = build_jacobian(&f, n, Variant::ZeroDiagonal).unwrap();
        g.bench_function(name, |b| b.iter(|| maximal_minors(black_box(&j), 100_000).unwrap()));
    }
    let (f, _) = fixture("x^3+y^3+z^3", &[1, 1, 1]);
    let j = build_jacobian(&f, 2, Variant::FDiagonal).unwrap();
    let cols = [0, 3, 5, 8];
    g.bench_function("bareiss_P8_f_diagonal", |b| b.iter(|| bareiss_determinant(black_box(&j.submatrix(&cols)))));
    g.finish();
}

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner");
    for (name, poly, w, n) in [
        ("E6_n2", "x^3+y^4", &[4u32, 3][..], 2u32),
        ("E8_surface_n2", "x^2+y^3+z^5", &[15, 10, 6], 2),
    ] {
        let (f, w) = fixture(poly, w);
        let gens = tn_generators(&f, n);
        let order = MonomialOrder::new(w);
        g.bench_function(name, |b| b.iter(|| groebner_basis(black_box(&gens), &order)));
    }
    g.finish();
}

fn derivations(c: &mut Criterion) {
    let mut g = c.benchmark_group("negative_scan");
    for (name, poly, w) in [("A4_n2", "x^2+y^5", &[5u32, 2][..]), ("E8_surface_n2", "x^2+y^3+z^5", &[15, 10, 6])] {
        let (f, w) = fixture(poly, w);
        let q = quotient_basis(&tn_generators(&f, 2), &MonomialOrder::new(w.clone()));
        g.bench_function(name, |b| b.iter(|| negative_derivation_scan(black_box(&q), &w).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, minors, groebner, derivations);
criterion_main!(benches);
