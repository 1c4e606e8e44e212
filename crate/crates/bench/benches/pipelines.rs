use criterion::{black_box, criterion_group, criterion_main, Criterion};
use gaugekit_core::algebra::cases::PoAlgebra;
use gaugekit_core::algebra::hopf::{commutator_pullback, FiltrationMask};
use gaugekit_core::algebra::steenrod::{verify_sq_w_case, Bso};
use gaugekit_core::homotopy::{gauge_pi, Base, GaugeQuery};
use gaugekit_core::{validate, GroupPresentation, PiTables};

fn bench_commutator(c: &mut Criterion) {
    let po = PoAlgebra::new(4, 16).expect("PO(16)");
    let u11 = po.u(11).expect("u11");
    c.bench_function("commutator_pullback PO(16) u11 cap 16", |b| {
        b.iter(|| {
            let (out, _) =
                commutator_pullback(&po.alg, &po.rule, black_box(u11), FiltrationMask::default())
                    .expect("pipeline");
            black_box(out)
        })
    });
}

fn bench_wu(c: &mut Criterion) {
    c.bench_function("sq lemma congruence cases n in 7..=24", |b| {
        b.iter(|| {
            for n in 7..=24 {
                black_box(verify_sq_w_case(black_box(n)).expect("lemma"));
            }
        })
    });
    let bso = Bso::new(24, None).expect("BSO(24)");
    let rule = bso.steenrod_rule().expect("rule");
    let e = bso.alg.parse_element("w2*w4 + w6*w3 + w11").expect("element");
    c.bench_function("cartan Sq^4 on a three-term element in BSO(24)", |b| {
        b.iter(|| black_box(rule.sq(&bso.alg, 4, black_box(&e)).expect("sq")))
    });
}

fn bench_presentation(c: &mut Criterion) {
    let p = GroupPresentation::u(12).expect("U(12)");
    c.bench_function("validate + s_invariant + canonicalize U(12)", |b| {
        b.iter(|| {
            let v = validate(black_box(&p)).expect("valid");
            black_box((v.s_invariant(), v.canonicalize()))
        })
    });
}

fn bench_homotopy(c: &mut Criterion) {
    let tables = PiTables::embedded();
    let v = validate(&GroupPresentation::u(8).expect("U(8)")).expect("valid");
    c.bench_function("gauge_pi grid U(8), both routes", |b| {
        b.iter(|| {
            for k in [7i64, 8] {
                for i in 1..=14u32 {
                    let q = GaugeQuery { genus: 3, k, degree: i, base: Base::Surface };
                    black_box(gauge_pi(&v, &q, tables).value);
                }
            }
        })
    });
}

criterion_group!(benches, bench_commutator, bench_wu, bench_presentation, bench_homotopy);
criterion_main!(benches);
