use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use plcomb::rectangles::place_configuration;
use plcomb_bench::all_quivers;

fn configurations(c: &mut Criterion) {
    let quivers = all_quivers(8);
    c.bench_function("configurations_rank_8", |b| {
        b.iter(|| {
            for q in &quivers {
                black_box(place_configuration(q).unwrap());
            }
        })
    });
}

criterion_group!(benches, configurations);
criterion_main!(benches);
