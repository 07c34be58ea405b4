//! Sequential against rayon-parallel execution of the sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use demazure::exec::Exec;
use demazure::products;

fn executors() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn bench_sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    for (name, exec) in executors() {
        g.bench_with_input(BenchmarkId::new("thm413_max3", name), &exec, |b, &e| {
            b.iter(|| products::sweep_thm413(3, e))
        });
        g.bench_with_input(BenchmarkId::new("thm418_max3", name), &exec, |b, &e| {
            b.iter(|| products::sweep_thm418(3, 2, e))
        });
        g.bench_with_input(BenchmarkId::new("conjecture_part2", name), &exec, |b, &e| {
            b.iter(|| products::sweep_conjecture(2, e))
        });
        g.bench_with_input(BenchmarkId::new("closedforms_max3", name), &exec, |b, &e| {
            b.iter(|| products::sweep_closed_forms(3, e))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
