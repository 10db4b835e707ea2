use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qudit_hierarchy::exec::Execution;
use qudit_hierarchy::hierarchy::{enumerate_level, LevelTable, MembershipOracle, DEFAULT_BUDGET};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate d=3 k=4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_level(3, 4, DEFAULT_BUDGET, false, exec).unwrap())
        });
    }
    group.finish();
}

fn membership(c: &mut Criterion) {
    let table = LevelTable::new(3, 3).unwrap();
    let gates: Vec<_> = (0..table.len()).step_by(19).map(|i| table.entry(i).1).collect();
    let mut group = c.benchmark_group("membership sweep d=3 k=3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                // a fresh oracle per run, so the memo does not carry over
                let oracle = MembershipOracle::new(exec);
                exec.all(&gates, |g| oracle.is_member(g, 3).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, membership);
criterion_main!(benches);
