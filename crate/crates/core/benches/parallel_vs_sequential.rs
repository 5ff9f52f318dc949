use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bicyclic::enumeration::{enumerate_bicyclic, EnumerationConfig};
use bicyclic::verify::collect_cells;
use bicyclic::Exec;

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [9, 10] {
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| enumerate_bicyclic(&EnumerationConfig::new(n).exec(exec)).unwrap().count())
            });
        }
    }
    group.finish();
}

fn cells(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_cells");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::new(name, 10), &10, |b, &n| {
            b.iter(|| collect_cells(n, exec).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, cells);
criterion_main!(benches);
