use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use jetlaw::determining::{noether_scan, OperatorKind};
use jetlaw::par::{set_execution, Execution};
use jetlaw::{suite, EvolutionEquation, Expr};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("ir-suite");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            set_execution(mode);
            b.iter(|| {
                let report = suite::run_ir(None);
                assert!(report.all_passed());
            })
        });
    }
    group.finish();
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("noether-scan-2-2-2");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            set_execution(mode);
            b.iter(|| {
                // fresh equation so the prolongation cache starts empty
                let eq = EvolutionEquation::gir_opaque(Expr::constant("a"), "f").unwrap();
                let report = noether_scan(&eq, 2, 2, 2, OperatorKind::Noether);
                assert!(report.all_forced());
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_suite, bench_scan);
criterion_main!(benches);
