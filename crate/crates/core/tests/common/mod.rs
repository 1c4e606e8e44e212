//! Shared generators for randomized test input.

use gaugekit_core::presentation::CentralElement;
use gaugekit_core::{GroupPresentation, SimpleType};
use proptest::prelude::*;

pub fn arb_simple_type() -> impl Strategy<Value = SimpleType> {
    prop_oneof![
        (2u32..=7).prop_map(SimpleType::SU),
        (1u32..=4).prop_map(SimpleType::Sp),
        (7u32..=14).prop_map(SimpleType::Spin),
        Just(SimpleType::G2),
        Just(SimpleType::F4),
        Just(SimpleType::E6),
        Just(SimpleType::E7),
        Just(SimpleType::E8),
    ]
}

fn arb_generator(factors: Vec<SimpleType>) -> impl Strategy<Value = CentralElement> {
    let per_factor: Vec<BoxedStrategy<Vec<u64>>> = factors
        .iter()
        .map(|f| {
            let spans: Vec<BoxedStrategy<u64>> =
                f.center().factors().iter().map(|&d| (0..d).boxed()).collect();
            spans.boxed()
        })
        .collect();
    ((1u64..=12), per_factor)
        .prop_flat_map(|(m, parts)| ((0..m), Just(m), Just(parts)))
        .prop_map(|(a, m, parts)| CentralElement::new(a, m, parts).expect("den > 0"))
}

/// Arbitrary shape-valid presentation; validity of `pi_1 = Z` is up to the
/// caller (filter on `validate`).
pub fn arb_presentation() -> impl Strategy<Value = GroupPresentation> {
    prop::collection::vec(arb_simple_type(), 1..=3).prop_flat_map(|factors| {
        let gens = prop::collection::vec(arb_generator(factors.clone()), 0..=2);
        (Just(factors), gens).prop_map(|(factors, gens)| {
            GroupPresentation::new(factors, gens).expect("shapes match")
        })
    })
}

/// Exact binomial coefficient, small enough for u64 at arguments <= 64.
#[allow(dead_code)] // each test target links its own copy of this module
pub fn binom_exact(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
