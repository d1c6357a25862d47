use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use adem_core::adem::{composite_formula, e3_normalized_cochain};
use adem_core::algebra::{random_cochain, random_cocycle};
use adem_core::cup::CupEngine;
use adem_core::ez::{Normalization, Perm};
use adem_core::{fixtures, Exec, Z2};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn cup_i(c: &mut Criterion) {
    let k = fixtures::simplex(12);
    let a = random_cochain::<Z2>(&k, 3, 1);
    let b = random_cochain::<Z2>(&k, 3, 2);
    let mut group = c.benchmark_group("cup_2 on simplex-12");
    for (name, exec) in MODES {
        let engine = CupEngine::new(exec);
        engine.cup_i(&k, &a, &b, 2).expect("degrees fit");
        group.bench_function(BenchmarkId::from_parameter(name), |bench| {
            bench.iter(|| engine.cup_i(&k, &a, &b, 2).expect("degrees fit"))
        });
    }
    group.finish();
}

fn e3(c: &mut Criterion) {
    let k = fixtures::simplex(11);
    let cocycle = random_cocycle::<Z2>(&k, 2, 3);
    let mut group = c.benchmark_group("normalized E_3 on simplex-11");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |bench| {
            bench.iter(|| e3_normalized_cochain(&k, &cocycle, exec).expect("2-cocycle"))
        });
    }
    group.finish();
}

fn composite(c: &mut Criterion) {
    let perms = [Perm::T, Perm::T2, Perm::Z];
    let words: Vec<Vec<Perm>> = perms.iter().flat_map(|&a| perms.iter().map(move |&b| vec![a, b])).collect();
    let mut group = c.benchmark_group("composite formula, nine words, degree 1, dimension 2");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |bench| {
            bench.iter(|| composite_formula(&words, 1, 2, Normalization::Eager, exec).expect("valid words"))
        });
    }
    group.finish();
}

criterion_group!(benches, cup_i, e3, composite);
criterion_main!(benches);
