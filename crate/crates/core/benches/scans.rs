use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use eislag::approx::{eisenstein_pairs, minimizers_on};
use eislag::par::Exec;
use eislag::romik::{triples_u64, DigitStream};
use eislag::spectrum::periodic_table;

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn tree(c: &mut Criterion) {
    let mut g = c.benchmark_group("triples");
    for (name, exec) in STRATEGIES {
        g.bench_with_input(BenchmarkId::new(name, 20_000), &20_000u64, |b, &n| {
            b.iter(|| triples_u64(black_box(n), exec))
        });
    }
    g.finish();
}

fn best_approx(c: &mut Criterion) {
    let triples = triples_u64(10_000, Exec::Sequential);
    let s = DigitStream::from_digits(&[4, 2], &[2, 3, 3]);
    let mut g = c.benchmark_group("minimizers");
    g.sample_size(20);
    for (name, exec) in STRATEGIES {
        g.bench_function(name, |b| b.iter(|| minimizers_on(black_box(&s), &triples, exec).unwrap()));
    }
    g.finish();
}

fn pairs(c: &mut Criterion) {
    let mut g = c.benchmark_group("eisenstein_pairs");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(name, |b| b.iter(|| eisenstein_pairs(black_box(100_000), exec)));
    }
    g.finish();
}

fn necklaces(c: &mut Criterion) {
    let mut g = c.benchmark_group("periodic_table");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(name, |b| b.iter(|| periodic_table(black_box(8), exec).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, tree, best_approx, pairs, necklaces);
criterion_main!(benches);
