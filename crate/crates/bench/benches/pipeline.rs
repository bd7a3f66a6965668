//! Benchmarks for the hot paths: the colimit engine, the pointwise
//! extension, the full monoidal transport with certificates, and the
//! regrading oracle.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use kanext_core::corpus;
use kanext_core::fincat::FinCategory;
use kanext_core::graded::{
    graded_to_lax_functor, monoidal_functor_from_hom, regrade_oracle_check, FiniteMonoid,
    GradedMonoid, MonoidHom,
};
use kanext_core::kan::left_kan_extension;
use kanext_core::limits::Limits;
use kanext_core::monkan::extend_lax_monoidal;
use kanext_core::setskel::{colimit_of_diagram, SetFunctor, SetMap, SetObj};

fn medium_fixture() -> (GradedMonoid, MonoidHom) {
    let v4 = corpus::monoid_by_name("z2xz2").expect("curated");
    let z2 = FiniteMonoid::cyclic(2);
    let graded = GradedMonoid::product_graded(&z2, &v4);
    let hom = MonoidHom {
        source: v4.clone(),
        target: z2,
        map: vec![0, 1, 0, 1],
    };
    (graded, hom)
}

fn bench_colimit(c: &mut Criterion) {
    // a parallel pair with moderately sized carriers
    let cat = Arc::new(FinCategory {
        num_objects: 2,
        morphisms: vec![(0, 0), (1, 1), (0, 1), (0, 1)],
        identity: vec![0, 1],
        compose: vec![
            Some(0), None, Some(2), Some(3),
            None, Some(1), None, None,
            None, Some(2), None, None,
            None, Some(3), None, None,
        ],
    });
    let n = 64;
    let src = SetObj::new(n);
    let tgt = SetObj::new(n);
    let f: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
    let g: Vec<usize> = (0..n).map(|i| (i * 5 + 11) % n).collect();
    let diagram = SetFunctor {
        source: cat,
        obj: vec![src, tgt],
        mor: vec![
            SetMap::identity(src),
            SetMap::identity(tgt),
            SetMap::new(src, tgt, f).unwrap(),
            SetMap::new(src, tgt, g).unwrap(),
        ],
    };
    let limits = Limits::default();
    c.bench_function("colimit_parallel_pair_64", |b| {
        b.iter(|| colimit_of_diagram(std::hint::black_box(&diagram), &limits).unwrap())
    });
}

fn bench_kan_extension(c: &mut Criterion) {
    let (graded, hom) = medium_fixture();
    let f = graded_to_lax_functor(&graded).unwrap();
    let g = monoidal_functor_from_hom(&hom).unwrap();
    let limits = Limits::default();
    c.bench_function("left_kan_extension_v4_to_z2", |b| {
        b.iter(|| left_kan_extension(std::hint::black_box(&f.functor), &g.functor, &limits).unwrap())
    });
}

fn bench_monoidal_extension(c: &mut Criterion) {
    let (graded, hom) = medium_fixture();
    let f = graded_to_lax_functor(&graded).unwrap();
    let g = monoidal_functor_from_hom(&hom).unwrap();
    let limits = Limits::default();
    c.bench_function("monoidal_extend_v4_to_z2", |b| {
        b.iter(|| extend_lax_monoidal(std::hint::black_box(&f), &g, &limits).unwrap())
    });
}

fn bench_regrade_oracle(c: &mut Criterion) {
    let (graded, hom) = medium_fixture();
    let limits = Limits::default();
    c.bench_function("regrade_oracle_v4_to_z2", |b| {
        b.iter(|| regrade_oracle_check(std::hint::black_box(&graded), &hom, &limits).unwrap())
    });
}

criterion_group!(
    benches,
    bench_colimit,
    bench_kan_extension,
    bench_monoidal_extension,
    bench_regrade_oracle
);
criterion_main!(benches);
