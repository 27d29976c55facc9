use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hodge_degen::catalog::{self, Catalog};
use hodge_degen::corpus::{verify_corpus, Mutation};
use hodge_degen::degen::{basic_boundary_exhaustion, ht_construct, minimal_types, minimal_witness};
use hodge_degen::lmhs::{adjoint_lmhs, deligne_splitting, validate_lmhs};
use hodge_degen::HodgeNumbers;

fn hodge_tate(c: &mut Criterion) {
    let mut group = c.benchmark_group("hodge_tate");
    for h in [vec![1, 1, 1], vec![1, 2, 2, 1], vec![1, 2, 2, 2, 1], vec![1, 1, 1, 1, 1, 1, 1, 1]] {
        let hn = HodgeNumbers::new(h.clone()).unwrap();
        let l = ht_construct(&hn).unwrap();
        let id = format!("{h:?}");
        group.bench_with_input(BenchmarkId::new("construct", &id), &hn, |b, hn| b.iter(|| ht_construct(black_box(hn))));
        group.bench_with_input(BenchmarkId::new("validate", &id), &l, |b, l| b.iter(|| validate_lmhs(black_box(l))));
        group.bench_with_input(BenchmarkId::new("splitting", &id), &l, |b, l| b.iter(|| deligne_splitting(black_box(l))));
        group.bench_with_input(BenchmarkId::new("adjoint", &id), &l, |b, l| b.iter(|| adjoint_lmhs(black_box(l))));
    }
    group.finish();
}

fn minimal(c: &mut Criterion) {
    let hn = HodgeNumbers::new(vec![1, 2, 2, 2, 1]).unwrap();
    let types = minimal_types(&hn);
    c.bench_function("minimal/witnesses (1,2,2,2,1)", |b| {
        b.iter(|| types.iter().map(|t| minimal_witness(t, black_box(&hn)).unwrap()).count())
    });
}

fn catalog_and_exhaustion(c: &mut Criterion) {
    let cat = Catalog::builtin();
    c.bench_function("catalog/G2", |b| b.iter(|| catalog::run(&cat, black_box("G2")).unwrap()));
    c.bench_function("catalog/F4", |b| b.iter(|| catalog::run(&cat, black_box("F4")).unwrap()));
    c.bench_function("normal_forms/exhaustion(7,4)", |b| b.iter(|| basic_boundary_exhaustion(black_box(7), 4)));
}

fn corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("corpus");
    group.sample_size(10);
    group.bench_function("first 20 cases", |b| b.iter(|| verify_corpus(0, Some(20), Mutation::None)));
    group.finish();
}

criterion_group!(benches, hodge_tate, minimal, catalog_and_exhaustion, corpus);
criterion_main!(benches);
