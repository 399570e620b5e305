//! Sequential against rayon-parallel execution of the main sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fpkz::acceptance::{ample_instances, sweep_instances};
use fpkz::analysis::verify_determinant;
use fpkz::construct::all_solutions;
use fpkz::oracle::solve_degrees;
use fpkz::{Exec, KzInstance};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn solution_sweep(c: &mut Criterion) {
    let insts: Vec<KzInstance> = sweep_instances()
        .into_iter()
        .filter(|i| i.rank() > 0 && i.p() <= 11)
        .collect();
    let mut g = c.benchmark_group("construct_and_verify");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                exec.map(&insts, |inst| {
                    all_solutions(inst)
                        .iter()
                        .all(|s| inst.verify_solution(&s.poly).passed())
                })
            })
        });
    }
    g.finish();
}

fn determinant_sweep(c: &mut Criterion) {
    let insts = ample_instances(13, 4);
    let mut g = c.benchmark_group("determinant");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| exec.map(&insts, |inst| verify_determinant(inst).map(|r| r.passed())))
        });
    }
    g.finish();
}

fn oracle_degrees(c: &mut Criterion) {
    let inst = KzInstance::new(11, 5, &[3, 4, 4]).expect("valid");
    let degrees: Vec<u32> = (0..=inst.sum_big_m() + 2 * inst.p()).collect();
    let mut g = c.benchmark_group("oracle_all_degrees");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| solve_degrees(&inst, &degrees, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, solution_sweep, determinant_sweep, oracle_degrees);
criterion_main!(benches);
