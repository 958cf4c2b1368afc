use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pregerst_bench::{forms_pairs, letters, pair};
use pregerst_core::words::ops::mu;
use pregerst_core::{Coalgebra, CoproductId, EnvelopeContext, FormsModel, GradingView, LawId, QPart};

fn mu_n(c: &mut Criterion) {
    let mut group = c.benchmark_group("mu");
    for n in [3, 5, 7, 9] {
        let w = letters(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &w, |b, w| {
            b.iter(|| mu(w, GradingView::Shift1).unwrap())
        });
    }
    group.finish();
}

fn kappa(c: &mut Criterion) {
    let co = Coalgebra::default();
    let mut group = c.benchmark_group("kappa");
    for (head, tail) in [(2, 1), (3, 2), (4, 2), (5, 3)] {
        let x = pair(head, tail, 2);
        group.bench_with_input(BenchmarkId::new("head_tail", format!("{head}x{tail}")), &x, |b, x| {
            b.iter(|| co.kappa(x).unwrap())
        });
    }
    group.finish();
}

fn laws(c: &mut Criterion) {
    let co = Coalgebra::default();
    let x = pair(3, 2, 2);
    let mut group = c.benchmark_group("law");
    for law in [LawId::PermCoalg, LawId::KappaCojacobi, LawId::Compat2] {
        group.bench_function(law.name(), |b| b.iter(|| co.check_law(law, &x).unwrap()));
    }
    group.finish();
}

fn codifferential(c: &mut Criterion) {
    let m = FormsModel::new(3, 3).unwrap();
    let ctx = EnvelopeContext::new(&m);
    let inputs = forms_pairs(&m, 8);
    let mut group = c.benchmark_group("codifferential");
    group.sample_size(20);
    group.bench_function("q_square", |b| {
        b.iter(|| inputs.iter().map(|x| ctx.q_square(QPart::Total, x).unwrap().len()).sum::<usize>())
    });
    group.bench_function("delta_coderivation", |b| {
        b.iter(|| {
            inputs
                .iter()
                .map(|x| ctx.check_coderivation(CoproductId::DeltaPerm, QPart::Total, x).unwrap().len())
                .sum::<usize>()
        })
    });
    group.finish();
}

criterion_group!(benches, mu_n, kappa, laws, codifferential);
criterion_main!(benches);
