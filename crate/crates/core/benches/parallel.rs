use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use parideal::irreducible::{check_equivalence, search_irreducible_sets};
use parideal::poset::{enumerate_j_antichains_with, NodeSet};
use parideal::{Exec, RootSystem};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn sys(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

fn antichains(c: &mut Criterion) {
    let rs = sys("E6");
    let empty = NodeSet::empty(rs.rank());
    let mut g = c.benchmark_group("antichains_E6");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_j_antichains_with(&rs, &empty, false, None, exec).len())
        });
    }
    g.finish();
}

fn equivalence(c: &mut Criterion) {
    let rs = sys("A3");
    let mut g = c.benchmark_group("equivalence_A3");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_equivalence(&rs, exec).unwrap().satisfying)
        });
    }
    g.finish();
}

fn classification(c: &mut Criterion) {
    let rs = sys("E6");
    let mut g = c.benchmark_group("classification_E6");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| search_irreducible_sets(&rs, exec).len())
        });
    }
    g.finish();
}

criterion_group!(benches, antichains, equivalence, classification);
criterion_main!(benches);
