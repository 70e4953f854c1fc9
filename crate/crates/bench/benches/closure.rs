use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fischer_lab::catalog;
use fischer_lab::fischer::build_system;
use fischer_lab::groups::{conjugacy_closure, generate, DEFAULT_MAX_ORDER};

fn group_closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate");
    g.sample_size(10);
    let s8 = catalog::symmetric(8).unwrap();
    g.bench_function("S8", |b| b.iter(|| generate(&s8.generators, DEFAULT_MAX_ORDER).unwrap()));
    let sp4 = catalog::symplectic_f2(2).unwrap();
    g.bench_function("Sp4(2)", |b| b.iter(|| generate(&sp4.generators, DEFAULT_MAX_ORDER).unwrap()));
    g.finish();
}

fn class_closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("transpositions");
    for n in [2, 3] {
        let inst = catalog::symplectic_f2(n).unwrap();
        g.bench_with_input(BenchmarkId::new("conjugacy_closure Sp2n(2)", n), &inst, |b, inst| {
            b.iter(|| conjugacy_closure(&inst.seeds, &inst.generators, 4096).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("build_system Sp2n(2)", n), &inst, |b, inst| {
            b.iter(|| build_system(&inst.generators, &inst.seeds, 4096).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, group_closure, class_closure);
criterion_main!(benches);
