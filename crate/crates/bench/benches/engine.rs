use criterion::{black_box, criterion_group, criterion_main, Criterion};
use vnum_core::{
    associated_primes, edge_ideal, edge_power_colon, v_number, Graph, Limits,
};

fn bench_power(c: &mut Criterion) {
    let c7 = Graph::cycle(7);
    let ideal = edge_ideal(&c7).unwrap();
    c.bench_function("power_c7_edge_ideal_k5", |b| {
        b.iter(|| black_box(&ideal).power(5).unwrap())
    });
}

fn bench_v_number(c: &mut Criterion) {
    let limits = Limits::DEFAULT;
    let c7 = Graph::cycle(7);
    let power = edge_ideal(&c7).unwrap().power(4).unwrap();
    c.bench_function("v_number_c7_power4", |b| {
        b.iter(|| v_number(black_box(&power), &limits).unwrap())
    });
}

fn bench_associated_primes(c: &mut Criterion) {
    let limits = Limits::DEFAULT;
    let c7 = Graph::cycle(7);
    let power = edge_ideal(&c7).unwrap().power(3).unwrap();
    c.bench_function("associated_primes_c7_power3", |b| {
        b.iter(|| associated_primes(black_box(&power), &limits).unwrap())
    });
}

fn bench_even_connection(c: &mut Criterion) {
    let k5 = Graph::complete(5);
    let es: Vec<(usize, usize)> = k5.edges().to_vec();
    c.bench_function("edge_power_colon_k5_all_edges", |b| {
        b.iter(|| edge_power_colon(black_box(&k5), &es).unwrap())
    });
}

criterion_group!(
    benches,
    bench_power,
    bench_v_number,
    bench_associated_primes,
    bench_even_connection
);
criterion_main!(benches);
