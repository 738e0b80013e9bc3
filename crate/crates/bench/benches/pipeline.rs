//! Timings of the main pipeline stages on the `A5` example.

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strata_core::cluster::{enumerate_class, DEFAULT_CAP};
use strata_core::job::run_seed;
use strata_core::minors::{gauss_plus, random_lower, sample_unitri};
use strata_core::prepro::hom_basis;
use strata_core::strata::{categorical_mutation, initial_tilting};
use strata_core::verify::a5_codim_one_job;

fn stages(c: &mut Criterion) {
    let job = a5_codim_one_job();
    let s = run_seed(&job).unwrap();

    c.bench_function("initial_tilting A5", |b| b.iter(|| initial_tilting(&s.spec).unwrap()));
    c.bench_function("enumerate_class A5", |b| b.iter(|| enumerate_class(&s.seed, DEFAULT_CAP).unwrap()));
    c.bench_function("categorical_mutation A5", |b| b.iter(|| categorical_mutation(&s.tilting, 0).unwrap()));

    let q = s.spec.algebra().injective(2);
    c.bench_function("hom_basis Q3 Q3 A5", |b| b.iter(|| hom_basis(q, q)));

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let z = random_lower(6, &mut rng).mul(&sample_unitri(6, &mut rng));
    c.bench_function("gauss_plus 6x6", |b| b.iter(|| gauss_plus(&z).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = stages
}
criterion_main!(benches);
