//! Property tests for the module invariants not already pinned by the
//! acceptance gate.

mod common;

use common::arb_presentation;
use gaugekit_core::classify::{self, EquivalenceVerdict};
use gaugekit_core::homotopy::{gauge_pi, sphere_gauge_pi_sun, Base, GaugeQuery};
use gaugekit_core::{validate, GroupPresentation, PiTables, SimpleType};
use num_integer::Integer;
use proptest::prelude::*;

fn tables() -> &'static PiTables {
    PiTables::embedded()
}

proptest! {
    /// Shape-valid presentations either validate or produce a torsion or
    /// empty-factor diagnostic; validation never panics.
    #[test]
    fn validation_is_total(p in arb_presentation()) {
        let _ = validate(&p);
    }

    /// The gcd invariant is periodic in k with period s(G).
    #[test]
    fn equivalence_is_gcd_periodic(p in arb_presentation(), k in -50i64..50) {
        let Ok(v) = validate(&p) else { return Ok(()) };
        let s = v.s_invariant() as i64;
        let eq = classify::equivalent(&v, k, k + s);
        prop_assert_eq!(eq.verdict, EquivalenceVerdict::Equivalent);
    }

    /// Samelson order is a presentation invariant.
    #[test]
    fn samelson_order_well_defined(p in arb_presentation()) {
        let Ok(v) = validate(&p) else { return Ok(()) };
        prop_assert_eq!(
            classify::samelson_order(&v),
            classify::samelson_order(&v.canonicalize())
        );
    }

    /// Verdicts only strengthen to NOT_EQUIVALENT inside the iff families.
    #[test]
    fn not_equivalent_needs_family(p in arb_presentation(), k in 0i64..40, l in 0i64..40) {
        let Ok(v) = validate(&p) else { return Ok(()) };
        let eq = classify::equivalent(&v, k, l);
        if eq.verdict == EquivalenceVerdict::NotEquivalent {
            prop_assert!(classify::is_iff_family(&v));
        }
    }

    /// Gauge-group homotopy only depends on the presentation through the
    /// group: canonicalization changes C but not the answers.
    #[test]
    fn gauge_pi_respects_canonicalization(
        n in 2u32..=6,
        mult in 1u64..=4,
        g in 0u32..=2,
        k in 0i64..=12,
        i in 1u32..=6,
    ) {
        // present U(n) with a deliberately fat C of order mult * n
        let p = GroupPresentation::new(
            vec![SimpleType::SU(n)],
            vec![gaugekit_core::CentralElement::new(1, mult * n as u64, vec![vec![1]]).unwrap()],
        ).unwrap();
        let Ok(v) = validate(&p) else { return Ok(()) };
        prop_assume!(i <= 2 * n - 2);
        let c = v.canonicalize();
        let q = GaugeQuery { genus: g, k, degree: i, base: Base::Surface };
        prop_assert_eq!(gauge_pi(&v, &q, tables()).value, gauge_pi(&c, &q, tables()).value);
    }

    /// The top-degree torsion depends on k only through the per-factor gcds,
    /// and equal descriptors force equal gcd classes (the distinguishing
    /// engine of the classification).
    #[test]
    fn top_degree_distinguishes_gcd_classes(
        n in 2u32..=6,
        r in 1usize..=2,
        k in 0i64..=30,
        l in 0i64..=30,
    ) {
        let factors = vec![SimpleType::SU(n); r];
        let gens = vec![gaugekit_core::CentralElement::new(
            1,
            n as u64,
            vec![vec![1]; r],
        ).unwrap()];
        let v = validate(&GroupPresentation::new(factors, gens).unwrap()).unwrap();
        let i = 2 * n - 2;
        let a = sphere_gauge_pi_sun(&v, k, i);
        let b = sphere_gauge_pi_sun(&v, l, i);
        let gk = k.unsigned_abs().gcd(&v.s_invariant());
        let gl = l.unsigned_abs().gcd(&v.s_invariant());
        prop_assert_eq!(a == b, gk == gl);
    }

    /// Parity pattern of the moduli groups: odd interior degrees are free of
    /// rank 2g, even ones of rank 2r (here r = 1).
    #[test]
    fn moduli_parity_pattern(n in 3u32..=6, g in 6u32..=10, i in 3u32..=8, k in 1i64..=5) {
        let upper = 2 * (g as i64 - 1) * (n as i64 - 1) - 2;
        prop_assume!((i as i64) < upper); // interior of the range
        prop_assume!(i < 2 * n - 1); // below the torsion degree
        prop_assume!(!(n == 2 && k == 2));
        let r = gaugekit_core::homotopy::moduli_pi(n, k, g, i, tables()).unwrap();
        match r.value {
            gaugekit_core::AbGroupDescriptor::Known { free_rank, ref torsion } => {
                prop_assert!(torsion.is_empty(), "interior degrees are free: {}", r.value);
                if i % 2 == 1 {
                    prop_assert_eq!(free_rank, 2 * g);
                } else {
                    prop_assert_eq!(free_rank, 2);
                }
            }
            ref other => prop_assert!(false, "unexpected {}", other),
        }
    }
}

/// Spot checks that random validation diagnostics name the torsion element.
#[test]
fn torsion_diagnostics_name_the_element() {
    let p = GroupPresentation::new(
        vec![SimpleType::Spin(12)],
        vec![gaugekit_core::CentralElement::new(0, 1, vec![vec![0, 1]]).unwrap()],
    )
    .unwrap();
    match validate(&p) {
        Err(gaugekit_core::Diagnostic::CentralTorsion { element }) => {
            assert!(element.contains("d-"), "{element}");
        }
        other => panic!("expected torsion, got {other:?}"),
    }
}
