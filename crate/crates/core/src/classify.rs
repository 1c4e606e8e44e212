//! Homotopy classification of gauge groups over a surface by the gcd
//! invariant `(k, s(G))`, and the order of the generating Samelson product.

use crate::presentation::Validated;
use num_integer::Integer;
use serde::Serialize;
use std::fmt;

/// Machine-readable tags naming the mathematical facts a verdict rests on.
pub mod citations {
    /// Equal gcd with s(G) implies the gauge groups agree at every localization.
    pub const GCD_SUFFICIENT: &str = "gcd-with-s-determines-local-type";
    /// For S^1 x SU(n)^r and S^1 x SU(4n-2)^s x Sp(2n-1)^t families the gcd
    /// invariant is complete.
    pub const GCD_COMPLETE_FOR_FAMILY: &str = "gcd-with-s-complete-invariant-for-family";
    /// The Samelson product <eps, 1_G> has order exactly s(G).
    pub const SAMELSON_ORDER: &str = "samelson-product-order-equals-s";
    /// Outside the covered families only the sufficient direction is known.
    pub const SUFFICIENT_ONLY: &str = "gcd-criterion-sufficient-only";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EquivalenceVerdict {
    #[serde(rename = "EQUIVALENT")]
    Equivalent,
    #[serde(rename = "NOT_EQUIVALENT")]
    NotEquivalent,
    #[serde(rename = "EQUIVALENT_SUFFICIENT_ONLY_UNKNOWN")]
    SufficientOnlyUnknown,
}

impl fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EquivalenceVerdict::Equivalent => "EQUIVALENT",
            EquivalenceVerdict::NotEquivalent => "NOT_EQUIVALENT",
            EquivalenceVerdict::SufficientOnlyUnknown => "EQUIVALENT_SUFFICIENT_ONLY_UNKNOWN",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Equivalence {
    pub verdict: EquivalenceVerdict,
    pub citation: &'static str,
    pub s: u64,
    pub gcd_k: u64,
    pub gcd_l: u64,
}

/// `gcd(k, s)` with the convention `gcd(0, s) = s` (the trivial bundle).
pub fn gcd_class(k: i64, s: u64) -> u64 {
    k.unsigned_abs().gcd(&s)
}

/// Order of the Samelson product `<eps, 1_G>`, which equals `s(G)`.
pub fn samelson_order(v: &Validated) -> u64 {
    v.s_invariant()
}

/// Whether the presentation's `H` falls in a family where the gcd invariant
/// is complete: `SU(n)^r` for one `n`, or factors drawn from
/// `{SU(4n-2), Sp(2n-1)}` for one `n`.
pub fn is_iff_family(v: &Validated) -> bool {
    use crate::catalog::SimpleType;
    let factors = v.factors();
    let all_su_same = factors
        .iter()
        .all(|f| matches!(f, SimpleType::SU(m) if Some(*m) == first_su(factors)));
    if all_su_same {
        return true;
    }
    // mixed family: SU(4n-2) or Sp(2n-1), one common n
    let mut common: Option<u32> = None;
    for f in factors {
        let n = match f {
            SimpleType::SU(m) if (m + 2) % 4 == 0 => (m + 2) / 4,
            SimpleType::Sp(l) if l % 2 == 1 => l.div_ceil(&2),
            _ => return false,
        };
        match common {
            None => common = Some(n),
            Some(c) if c == n => {}
            Some(_) => return false,
        }
    }
    common.is_some()
}

fn first_su(factors: &[crate::catalog::SimpleType]) -> Option<u32> {
    match factors.first() {
        Some(crate::catalog::SimpleType::SU(m)) => Some(*m),
        _ => None,
    }
}

/// Compare the gauge groups of the bundles `k` and `l`.
pub fn equivalent(v: &Validated, k: i64, l: i64) -> Equivalence {
    let s = v.s_invariant();
    let gcd_k = gcd_class(k, s);
    let gcd_l = gcd_class(l, s);
    let (verdict, citation) = if gcd_k == gcd_l {
        (EquivalenceVerdict::Equivalent, citations::GCD_SUFFICIENT)
    } else if is_iff_family(v) {
        (EquivalenceVerdict::NotEquivalent, citations::GCD_COMPLETE_FOR_FAMILY)
    } else {
        (EquivalenceVerdict::SufficientOnlyUnknown, citations::SUFFICIENT_ONLY)
    };
    Equivalence { verdict, citation, s, gcd_k, gcd_l }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Exactness {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "upper bound")]
    UpperBound,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassCount {
    pub count: usize,
    /// One representative bundle class per divisor of s(G).
    pub representatives: Vec<i64>,
    pub exactness: Exactness,
}

/// Number of homotopy types among the `G_k(X, G)`, as divisors of `s(G)`.
///
/// Exact for the iff families (and trivially when s = 1); an upper bound
/// otherwise.
pub fn class_count(v: &Validated) -> ClassCount {
    let s = v.s_invariant();
    if s == 1 {
        return ClassCount { count: 1, representatives: vec![0], exactness: Exactness::Exact };
    }
    let representatives: Vec<i64> = divisors(s).into_iter().map(|d| d as i64).collect();
    let exactness = if is_iff_family(v) { Exactness::Exact } else { Exactness::UpperBound };
    ClassCount { count: representatives.len(), representatives, exactness }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}
