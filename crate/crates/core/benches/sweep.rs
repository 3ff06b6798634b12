use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hermck::ck::extend_batch;
use hermck::dims::dim_recurrences_check;
use hermck::linalg::monogenic_basis_with;
use hermck::{random, Execution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn nullspace(c: &mut Criterion) {
    let mut g = c.benchmark_group("monogenic_basis n=4 r=2 a=b=3");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |bench| {
            bench.iter(|| monogenic_basis_with(exec, 4, 2, 3, 3).unwrap().len())
        });
    }
    g.finish();
}

fn batch_extension(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let data: Vec<_> = (0..64).map(|k| random::compatible_data(&mut rng, 4, 1 + k % 3, 3, 3)).collect();
    let mut g = c.benchmark_group("extend_batch 64 x (n=4, a=b=3)");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |bench| bench.iter(|| extend_batch(exec, black_box(&data))));
    }
    g.finish();
}

fn recurrences(c: &mut Criterion) {
    let mut g = c.benchmark_group("dim recurrences n<=12 a,b<=12");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |bench| {
            bench.iter(|| dim_recurrences_check(exec, 2..=12, 12, 12).is_ok())
        });
    }
    g.finish();
}

criterion_group!(benches, nullspace, batch_extension, recurrences);
criterion_main!(benches);
