use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hrschur::analysis::polya::toeplitz_minors_nonneg;
use hrschur::analysis::{lorentzian_check, LorentzianMode};
use hrschur::rational::int;
use hrschur::schur::{derived_schur_all, schur_jt, schur_ssyt};
use hrschur::{inertia, intersection_form, Partition};
use hrschur_bench::{cycling_bundle, form_class, partitions_fitting};
use std::hint::black_box;

fn schur_polynomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("schur_jt");
    for (w, e) in [(4u32, 3usize), (6, 3), (6, 4), (8, 4)] {
        let parts = partitions_fitting(w, e as u32);
        g.bench_with_input(
            BenchmarkId::new("jacobi_trudi", format!("w{w}_e{e}")),
            &parts,
            |b, ps| {
                b.iter(|| {
                    ps.iter()
                        .map(|p| schur_jt(black_box(p), e).len())
                        .sum::<usize>()
                })
            },
        );
        g.bench_with_input(
            BenchmarkId::new("tableaux", format!("w{w}_e{e}")),
            &parts,
            |b, ps| {
                b.iter(|| {
                    ps.iter()
                        .map(|p| schur_ssyt(black_box(p), e).len())
                        .sum::<usize>()
                })
            },
        );
    }
    let lam = Partition::new(vec![3, 2, 1]).unwrap();
    g.bench_function("derived_all_321_e4", |b| {
        b.iter(|| derived_schur_all(black_box(&lam), 4))
    });
    g.finish();
}

fn forms(c: &mut Criterion) {
    let mut g = c.benchmark_group("inertia");
    for factors in [vec![2u32, 3], vec![1, 2, 3], vec![2, 2, 2]] {
        let dim: u32 = factors.iter().sum();
        let lam = Partition::column(dim as usize - 2);
        let rank = dim as usize - 2;
        let omega = form_class(&factors, rank, &lam);
        let space = omega.space().clone();
        let label = format!("{factors:?}");
        g.bench_with_input(
            BenchmarkId::new("form_and_inertia", &label),
            &omega,
            |b, w| b.iter(|| inertia(&intersection_form(black_box(w), &space).unwrap()).unwrap()),
        );
    }
    g.finish();
}

fn characteristic_classes(c: &mut Criterion) {
    let mut g = c.benchmark_group("char_class");
    for (factors, e) in [(vec![2u32, 3], 3usize), (vec![1, 2, 3], 4), (vec![3, 3], 5)] {
        let bundle = cycling_bundle(&factors, e);
        let lam = Partition::new(vec![2, 1, 1]).unwrap();
        let label = format!("{factors:?}_e{e}");
        g.bench_with_input(BenchmarkId::new("schur_class", &label), &bundle, |b, eb| {
            b.iter(|| eb.schur_class(black_box(&lam)))
        });
        g.bench_with_input(
            BenchmarkId::new("chern_twist_rule", &label),
            &bundle,
            |b, eb| {
                let twisted = eb
                    .twisted(&vec![hrschur::rational::frac(1, 3); factors.len()])
                    .unwrap();
                b.iter(|| twisted.chern_by_twist_rule(black_box(2)))
            },
        );
    }
    g.finish();
}

fn certifiers(c: &mut Criterion) {
    let mut g = c.benchmark_group("certifiers");
    let binomial: Vec<_> = [1, 4, 6, 4, 1].into_iter().map(int).collect();
    g.bench_function("toeplitz_minors_order_16", |b| {
        b.iter(|| toeplitz_minors_nonneg(black_box(&binomial), 16))
    });
    let p = schur_jt(&Partition::new(vec![2, 2, 1]).unwrap(), 3).normalize();
    let mode = LorentzianMode::Perturbed(hrschur::rational::frac(1, 100));
    g.bench_function("lorentzian_221_e3", |b| {
        b.iter(|| lorentzian_check(black_box(&p), &mode).unwrap())
    });
    g.finish();
}

criterion_group!(
    benches,
    schur_polynomials,
    forms,
    characteristic_classes,
    certifiers
);
criterion_main!(benches);
