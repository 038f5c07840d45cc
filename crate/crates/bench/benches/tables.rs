use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use weylcert_bench::sample_profiles;
use weylcert_core::combinatorics::partitions_of;
use weylcert_core::dirac::certify;
use weylcert_core::springer::{good_set_by_lr, good_set_by_span, kostka_foulkes};
use weylcert_core::weyl::{character_table, elliptic_pairing, lr_coefficient, WeylType};
use weylcert_core::{DualType, Partition, Which};

fn kostka(c: &mut Criterion) {
    let ps = partitions_of(7);
    c.bench_function("kostka_foulkes n=7, all pairs", |b| {
        b.iter(|| {
            for l in &ps {
                for m in &ps {
                    black_box(kostka_foulkes(l, m).unwrap());
                }
            }
        })
    });
}

fn lr(c: &mut Criterion) {
    let lambda = Partition::new(vec![4, 3, 2, 1]).unwrap();
    let mu = Partition::new(vec![3, 2, 1]).unwrap();
    let nu = Partition::new(vec![2, 1, 1]).unwrap();
    c.bench_function("lr_coefficient (4321; 321, 211)", |b| {
        b.iter(|| lr_coefficient(black_box(&lambda), &mu, &nu).unwrap())
    });
}

fn pairing(c: &mut Criterion) {
    let table = character_table(WeylType::b(5));
    c.bench_function("elliptic_pairing W(B5), all pairs", |b| {
        b.iter(|| {
            for i in 0..table.irreps.len() {
                for j in i..table.irreps.len() {
                    black_box(elliptic_pairing(&table.character(i), &table.character(j)).unwrap());
                }
            }
        })
    });
}

fn routes(c: &mut Criterion) {
    let sp8 = DualType::sp(8).unwrap();
    let sl7 = DualType::sl(7).unwrap();
    let mut g = c.benchmark_group("good sets");
    g.sample_size(10);
    g.bench_function("span route sp(8) subregular", |b| b.iter(|| good_set_by_span(sp8, Which::Subregular).unwrap()));
    g.bench_function("lr route sp(8) subregular", |b| b.iter(|| good_set_by_lr(sp8, Which::Subregular).unwrap()));
    g.bench_function("span route sl(7) subsubregular", |b| {
        b.iter(|| good_set_by_span(sl7, Which::Subsubregular).unwrap())
    });
    g.finish();
}

fn certificates(c: &mut Criterion) {
    let profiles = sample_profiles();
    for p in &profiles {
        certify(p).unwrap();
    }
    c.bench_function("certify, warm caches", |b| {
        b.iter(|| {
            for p in &profiles {
                black_box(certify(p).unwrap());
            }
        })
    });
}

criterion_group!(benches, kostka, lr, pairing, routes, certificates);
criterion_main!(benches);
