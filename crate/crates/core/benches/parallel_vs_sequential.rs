use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use schubertq::glbc::glbc_table_with;
use schubertq::qh::{c1_matrix_with, check_ring_relations_with, operator_matrix_with};
use schubertq::spectral::{eigenbasis_with, verify_eigenpairs_with};
use schubertq::{Execution, Space};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn operators(c: &mut Criterion) {
    let mut group = c.benchmark_group("operator_matrix");
    for n in [6u32, 8, 10] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| operator_matrix_with(exec, Space::Og, black_box(n), 2).unwrap())
            });
        }
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("c1_squared");
    for n in [6u32, 8] {
        let m = c1_matrix_with(Execution::Sequential, Space::Lg, n).unwrap().matrix;
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &m, |b, m| {
                b.iter(|| m.checked_mul_with(black_box(m), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn relations(c: &mut Criterion) {
    let mut group = c.benchmark_group("ring_relations");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 7), |b| {
            b.iter(|| check_ring_relations_with(exec, Space::Og, black_box(7)).unwrap())
        });
    }
    group.finish();
}

fn eigen(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigenbasis");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 8), |b| {
            b.iter(|| eigenbasis_with(exec, Space::Lg, black_box(8)).unwrap())
        });
        group.bench_function(BenchmarkId::new(format!("{name}_verify"), 6), |b| {
            b.iter(|| verify_eigenpairs_with(exec, Space::Og, black_box(6), 1e-8).unwrap())
        });
    }
    group.finish();
}

fn glbc(c: &mut Criterion) {
    let mut group = c.benchmark_group("glbc_table");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 12), |b| {
            b.iter(|| glbc_table_with(exec, Space::Lg, black_box(12)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, operators, products, relations, eigen, glbc);
criterion_main!(benches);
