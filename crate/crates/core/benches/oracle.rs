use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hampair::analysis::sweep_paths_realized;
use hampair::instances::{make_uniform_circle, make_uniform_line};
use hampair::oracle::{enumerate_paths, search_path_pairs, search_tour_pairs, ObjectiveKind, OracleConfig};
use hampair::properties::tour_parity_check;
use hampair::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn cfg(exec: Execution) -> OracleConfig {
    OracleConfig { exec, ..Default::default() }
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_paths");
    g.sample_size(10);
    for n in [9, 10] {
        let line = make_uniform_line(n).unwrap();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| enumerate_paths(black_box(&line), 0, n - 1, &cfg(exec)).unwrap().len())
            });
        }
    }
    g.finish();
}

fn pair_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("pair_search");
    g.sample_size(10);
    let line = make_uniform_line(9).unwrap();
    let circle = make_uniform_circle(8).unwrap();
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(format!("{name}/path_min_total"), 9), |b| {
            b.iter(|| search_path_pairs(black_box(&line), 0, 8, ObjectiveKind::MinTotal, &cfg(exec)).unwrap().min_total_cost)
        });
        g.bench_function(BenchmarkId::new(format!("{name}/tour_min_max"), 8), |b| {
            b.iter(|| search_tour_pairs(black_box(&circle), ObjectiveKind::MinMax, &cfg(exec)).unwrap().min_max_cost)
        });
    }
    g.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "paths_6_500"), |b| {
            b.iter(|| sweep_paths_realized(6, 500, exec).unwrap().max)
        });
        g.bench_function(BenchmarkId::new(name, "parity_8"), |b| b.iter(|| tour_parity_check(8, exec).unwrap().cases));
    }
    g.finish();
}

criterion_group!(benches, enumeration, pair_search, sweeps);
criterion_main!(benches);
