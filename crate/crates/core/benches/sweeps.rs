//! Sequential against rayon sweeps on the two heaviest checks.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use crossed_kernel::crossed::{validate_axioms, ValidateOptions};
use crossed_kernel::resolutions::{enumerate_extensions, standard_resolution};
use crossed_kernel::{Exec, Group, GroupTable};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn validate(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate_axioms");
    group.sample_size(10);
    for name in ["S3", "C2xC2"] {
        let cx = standard_resolution(&Group::named(name).unwrap(), 4).unwrap();
        for (mode, exec) in MODES {
            let opts = ValidateOptions { samples: 1000, seed: 0, exec };
            group.bench_with_input(BenchmarkId::new(mode, name), &cx, |b, cx| {
                b.iter(|| black_box(validate_axioms(cx, &opts)))
            });
        }
    }
    group.finish();
}

fn extensions(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_extensions");
    group.sample_size(10);
    let kernels = [("C4", GroupTable::cyclic(4)), ("S3", GroupTable::symmetric3())];
    for (name, k) in &kernels {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), k, |b, k| {
                b.iter(|| black_box(enumerate_extensions(2, k, exec).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, validate, extensions);
criterion_main!(benches);
