use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use crooked_core::codes::{ParityCheck, PreparataCode};
use crooked_core::gf2m::FieldContext;
use crooked_core::graphs::CoverGraph;
use crooked_core::vbf::CrookedStrategy;
use crooked_core::VectorialFunction;

fn ctx(m: u32) -> Arc<FieldContext> {
    Arc::new(FieldContext::new(m, None).unwrap())
}

fn bench_field_ops(c: &mut Criterion) {
    let f = ctx(15);
    c.bench_function("gf2m/mul m=15", |b| {
        let mut x: u16 = 1;
        b.iter(|| {
            x = f.mul(black_box(x), 0x1234) | 1;
            x
        });
    });
    c.bench_function("gf2m/pow m=15", |b| {
        b.iter(|| f.pow(black_box(0x2b3), black_box(30000)));
    });
    c.bench_function("gf2m/build_tables m=15", |b| {
        b.iter(|| FieldContext::new(15, None).unwrap());
    });
}

fn bench_predicates(c: &mut Criterion) {
    let gold7 = VectorialFunction::from_power(ctx(7), 3).unwrap();
    let kasami7 = VectorialFunction::from_power(ctx(7), 13).unwrap();
    c.bench_function("vbf/is_apn gold m=7", |b| b.iter(|| gold7.is_apn()));
    c.bench_function("vbf/is_crooked hyperplane gold m=7", |b| {
        b.iter(|| gold7.is_crooked_with(CrookedStrategy::Hyperplane))
    });
    c.bench_function("vbf/is_crooked definitional gold m=7", |b| {
        b.iter(|| gold7.is_crooked_with(CrookedStrategy::Definitional))
    });
    c.bench_function("vbf/is_crooked hyperplane kasami m=7", |b| {
        b.iter(|| kasami7.is_crooked_with(CrookedStrategy::Hyperplane))
    });
}

fn bench_codes(c: &mut Criterion) {
    let bch = ParityCheck::new(&VectorialFunction::from_power(ctx(5), 3).unwrap());
    c.bench_function("codes/min_distance bch m=5", |b| b.iter(|| bch.min_distance()));
    let gold3 = VectorialFunction::from_power(ctx(3), 3).unwrap();
    c.bench_function("codes/preparata_enumerate m=3", |b| {
        b.iter(|| PreparataCode::enumerate(&gold3).unwrap().len())
    });
}

fn bench_graphs(c: &mut Criterion) {
    let gold3 = VectorialFunction::from_power(ctx(3), 3).unwrap();
    let gold5 = VectorialFunction::from_power(ctx(5), 5).unwrap();
    c.bench_function("graphs/build m=5", |b| b.iter(|| CoverGraph::build(&gold5).unwrap().order()));
    c.bench_function("graphs/intersection_array m=3", |b| {
        let g = CoverGraph::build(&gold3).unwrap();
        b.iter(|| g.graph().intersection_array().unwrap())
    });
    let mut slow = c.benchmark_group("graphs/full-drg");
    slow.sample_size(10);
    slow.bench_function("intersection_array m=5", |b| {
        let g = CoverGraph::build(&gold5).unwrap();
        b.iter(|| g.graph().intersection_array().unwrap())
    });
    slow.finish();
}

criterion_group!(benches, bench_field_ops, bench_predicates, bench_codes, bench_graphs);
criterion_main!(benches);
