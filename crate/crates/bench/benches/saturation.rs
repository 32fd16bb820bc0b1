//! Benchmarks for the hot paths: embedding search, the full saturation
//! sweep, canonicalization, level enumeration, weight tables, and the
//! closed-form constructions.

use criterion::{criterion_group, criterion_main, Criterion};
use saturn_core::constructions::{caterpillar_p5, double_star, saturated_double_star, saturated_shorty};
use saturn_core::generate::{circulant, clique};
use saturn_core::oracle::{brute_force_sat, canonical_form, enumerate_graphs, SatOptions};
use saturn_core::saturation::{find_embedding, is_h_saturated};
use saturn_core::weights::weight_summary;
use std::hint::black_box;

fn embedding_and_verification(c: &mut Criterion) {
    let pattern = double_star(4, 5);
    let host = saturated_double_star(4, 5, 32).unwrap().graph;
    let (x, y) = host.non_edges()[0];
    let augmented = host.add_edge(x, y).unwrap();

    c.bench_function("find_embedding/double_star_in_n32", |b| {
        b.iter(|| find_embedding(black_box(&augmented), black_box(&pattern), None))
    });
    c.bench_function("is_h_saturated/double_star_n32", |b| {
        b.iter(|| is_h_saturated(black_box(&host), black_box(&pattern)))
    });

    let shorty_host = saturated_shorty(2, 31).unwrap().graph;
    let shorty_pattern = caterpillar_p5(1);
    c.bench_function("is_h_saturated/caterpillar_n31", |b| {
        b.iter(|| is_h_saturated(black_box(&shorty_host), black_box(&shorty_pattern)))
    });
}

fn canonicalization(c: &mut Criterion) {
    let regular = circulant(8, &[1, 2]).unwrap();
    c.bench_function("canonical_form/circulant_8_regular", |b| {
        b.iter(|| canonical_form(black_box(&regular)))
    });
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_graphs/n6_m7", |b| {
        b.iter(|| enumerate_graphs(black_box(6), black_box(7)))
    });
}

fn oracle(c: &mut Criterion) {
    let triangle = clique(3);
    c.bench_function("brute_force_sat/triangle_n6", |b| {
        b.iter(|| brute_force_sat(black_box(6), black_box(&triangle), SatOptions::default()))
    });
}

fn weights(c: &mut Criterion) {
    let caterpillar = caterpillar_p5(4);
    c.bench_function("weight_summary/caterpillar_order17", |b| {
        b.iter(|| weight_summary(black_box(&caterpillar)))
    });
}

fn constructions(c: &mut Criterion) {
    c.bench_function("saturated_double_star/n200", |b| {
        b.iter(|| saturated_double_star(black_box(4), black_box(5), black_box(200)))
    });
    c.bench_function("saturated_shorty/n151", |b| {
        b.iter(|| saturated_shorty(black_box(3), black_box(151)))
    });
}

criterion_group!(
    benches,
    embedding_and_verification,
    canonicalization,
    enumeration,
    oracle,
    weights,
    constructions
);
criterion_main!(benches);
