use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tropdiff::exec::Strategy;
use tropdiff::parse::parse_poly;
use tropdiff::solve::enumerate_boolean_solutions;
use tropdiff::verify::{leibniz_suite, SuiteOptions};
use tropdiff::{NatNorm, PairDescriptor, SemiringKind, SeriesDifferential};

const STRATEGIES: [Strategy; 2] = [Strategy::Sequential, Strategy::Parallel];

fn enumeration(c: &mut Criterion) {
    let f = parse_poly("x1 + e^-1*x1' + x1*x1'' + e^-2*x1'^2", SemiringKind::TropExp).unwrap();
    let pair = PairDescriptor::grigoriev();
    let mut group = c.benchmark_group("enumerate");
    for max_deg in [8u32, 11] {
        for s in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(s.to_string(), max_deg), &max_deg, |b, &d| {
                b.iter(|| enumerate_boolean_solutions(black_box(&f), d, &pair, s).unwrap())
            });
        }
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("leibniz_suite");
    group.sample_size(10);
    let d = SeriesDifferential::Weighted(NatNorm::PAdic(2));
    for s in STRATEGIES {
        let opts = SuiteOptions { cases: 200, strategy: s, ..SuiteOptions::default() };
        group.bench_function(s.to_string(), |b| b.iter(|| leibniz_suite(d, black_box(&opts))));
    }
    group.finish();
}

criterion_group!(benches, enumeration, suites);
criterion_main!(benches);
