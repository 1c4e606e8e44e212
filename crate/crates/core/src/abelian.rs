//! Finite abelian groups with exact subgroup arithmetic, and descriptors of
//! finitely generated abelian groups.
//!
//! A [`FinAbGroup`] is presented by its invariant factors `d1 | d2 | ... | dr`;
//! elements are exponent vectors reduced modulo the factors. All groups in
//! this crate are tiny (orders up to a few hundred), so subgroup computations
//! work by exact closure rather than matrix normal forms.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// An element of a [`FinAbGroup`]: one exponent per invariant factor.
pub type Elt = Vec<u64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AbelianError {
    #[error("invariant factors must each be >= 2 and form a divisibility chain, got {0:?}")]
    BadFactors(Vec<u64>),
    #[error("element has {got} coordinates, group has {want} invariant factors")]
    BadElement { got: usize, want: usize },
    #[error("no named element {0:?} in this group")]
    UnknownName(String),
}

/// A finite abelian group `Z/d1 x ... x Z/dr` with `d1 | d2 | ... | dr`,
/// together with a dictionary of named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAbGroup {
    factors: Vec<u64>,
    named: Vec<(String, Elt)>,
}

impl FinAbGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new(), named: Vec::new() }
    }

    pub fn new(factors: Vec<u64>) -> Result<Self, AbelianError> {
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(AbelianError::BadFactors(factors.clone()));
            }
        }
        if factors.iter().any(|&d| d < 2) {
            return Err(AbelianError::BadFactors(factors));
        }
        Ok(FinAbGroup { factors, named: Vec::new() })
    }

    /// Attach a named element; the exponent vector is reduced on entry.
    pub fn with_named(mut self, name: &str, elt: Elt) -> Result<Self, AbelianError> {
        let elt = self.reduce(elt)?;
        self.named.push((name.to_string(), elt));
        Ok(self)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> Elt {
        vec![0; self.factors.len()]
    }

    pub fn reduce(&self, mut e: Elt) -> Result<Elt, AbelianError> {
        if e.len() != self.factors.len() {
            return Err(AbelianError::BadElement { got: e.len(), want: self.factors.len() });
        }
        for (x, d) in e.iter_mut().zip(&self.factors) {
            *x %= d;
        }
        Ok(e)
    }

    pub fn add(&self, a: &Elt, b: &Elt) -> Elt {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), d)| (x + y) % d).collect()
    }

    pub fn neg(&self, a: &Elt) -> Elt {
        a.iter().zip(&self.factors).map(|(x, d)| (d - x) % d).collect()
    }

    pub fn scale(&self, m: u64, a: &Elt) -> Elt {
        a.iter().zip(&self.factors).map(|(x, d)| (x % d).wrapping_mul(m % d) % d).collect()
    }

    pub fn order_of(&self, a: &Elt) -> u64 {
        a.iter()
            .zip(&self.factors)
            .map(|(x, d)| d / num_integer::gcd(*x, *d))
            .fold(1, num_integer::lcm)
    }

    /// Look up a named element.
    pub fn named(&self, name: &str) -> Result<Elt, AbelianError> {
        self.named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e.clone())
            .ok_or_else(|| AbelianError::UnknownName(name.to_string()))
    }

    pub fn named_elements(&self) -> &[(String, Elt)] {
        &self.named
    }

    /// The subgroup generated by `gens`, as a sorted element set.
    pub fn closure(&self, gens: &[Elt]) -> BTreeSet<Elt> {
        let mut set: BTreeSet<Elt> = BTreeSet::new();
        set.insert(self.zero());
        let mut frontier: Vec<Elt> = vec![self.zero()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Invariant factors of a subgroup given by its full element set.
    pub fn invariant_factors_of(&self, elements: &BTreeSet<Elt>) -> Vec<u64> {
        let orders: Vec<u64> = elements.iter().map(|e| self.order_of(e)).collect();
        invariant_factors_from_element_orders(&orders)
    }
}

/// Recover the invariant factors of a finite abelian group from the multiset
/// of its element orders (identity included).
///
/// Works prime by prime: the number of elements killed by `p^k` determines
/// the conjugate of the type partition of the p-primary component.
pub fn invariant_factors_from_element_orders(orders: &[u64]) -> Vec<u64> {
    let order = orders.len() as u64;
    if order <= 1 {
        return Vec::new();
    }
    let factorization = factorize(order);
    let primes: Vec<u64> = factorization.iter().map(|(p, _)| *p).collect();
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    for &(p, vmax) in &factorization {
        // conj[k-1] = log_p of #{x : p^k x = 0} / #{x : p^(k-1) x = 0}
        let mut conj: Vec<u32> = Vec::new();
        let mut prev = 1u64;
        for k in 1..=vmax {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let mut parts = 0u32;
            let mut r = count / prev;
            while r > 1 {
                r /= p;
                parts += 1;
            }
            if parts == 0 {
                break;
            }
            conj.push(parts);
            prev = count;
        }
        // conjugate back: lambda_j = #{k : conj[k] >= j+1}
        let rank = conj.first().copied().unwrap_or(0);
        let mut lambda = vec![0u32; rank as usize];
        for &c in &conj {
            for item in lambda.iter_mut().take(c as usize) {
                *item += 1;
            }
        }
        per_prime.push(lambda);
    }
    merge_primary(&primes, &per_prime)
}

/// Combine per-prime type partitions (largest exponent first) into an
/// ascending invariant-factor chain.
fn merge_primary(primes: &[u64], exps: &[Vec<u32>]) -> Vec<u64> {
    let rank = exps.iter().map(Vec::len).max().unwrap_or(0);
    let mut chain = Vec::new();
    for j in 0..rank {
        let mut t = 1u64;
        for (p, lam) in primes.iter().zip(exps) {
            if let Some(e) = lam.get(j) {
                t *= p.pow(*e);
            }
        }
        chain.push(t);
    }
    chain.reverse(); // ascending: d1 | d2 | ...
    chain
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut v = 0;
            while n.is_multiple_of(p) {
                n /= p;
                v += 1;
            }
            out.push((p, v));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Canonical invariant factors of a direct sum of cyclic groups.
pub fn invariant_factors_from_orders(orders: &[u64]) -> Vec<u64> {
    let mut primes: BTreeSet<u64> = BTreeSet::new();
    let mut factored: Vec<Vec<(u64, u32)>> = Vec::new();
    for &m in orders {
        if m <= 1 {
            factored.push(Vec::new());
            continue;
        }
        let f = factorize(m);
        primes.extend(f.iter().map(|(p, _)| p));
        factored.push(f);
    }
    let primes: Vec<u64> = primes.into_iter().collect();
    let mut exps: Vec<Vec<u32>> = Vec::new();
    for &p in &primes {
        let mut lam: Vec<u32> = factored
            .iter()
            .filter_map(|f| f.iter().find(|(q, _)| *q == p).map(|(_, v)| *v))
            .collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        exps.push(lam);
    }
    merge_primary(&primes, &exps)
}

/// A finitely generated abelian group, or an explicit "not tabulated" marker.
///
/// Canonical form: the torsion part is an ascending divisibility chain, so
/// structural equality is isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbGroupDescriptor {
    Known { free_rank: u32, torsion: Vec<u64> },
    Unknown { reason: String },
}

impl AbGroupDescriptor {
    pub fn zero() -> Self {
        AbGroupDescriptor::Known { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: u32) -> Self {
        AbGroupDescriptor::Known { free_rank: rank, torsion: Vec::new() }
    }

    /// `Z/t`; a modulus of 1 (or 0) collapses to the trivial group.
    pub fn cyclic(t: u64) -> Self {
        if t <= 1 {
            Self::zero()
        } else {
            AbGroupDescriptor::Known { free_rank: 0, torsion: vec![t] }
        }
    }

    /// Build from a free rank and arbitrary cyclic orders, canonicalizing.
    pub fn known(free_rank: u32, orders: &[u64]) -> Self {
        AbGroupDescriptor::Known { free_rank, torsion: invariant_factors_from_orders(orders) }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        AbGroupDescriptor::Unknown { reason: reason.into() }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, AbGroupDescriptor::Known { free_rank: 0, torsion } if torsion.is_empty())
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, AbGroupDescriptor::Unknown { .. })
    }

    /// Direct sum; Unknown absorbs.
    pub fn direct_sum(&self, other: &Self) -> Self {
        match (self, other) {
            (AbGroupDescriptor::Unknown { reason }, _) | (_, AbGroupDescriptor::Unknown { reason }) => {
                AbGroupDescriptor::unknown(reason.clone())
            }
            (
                AbGroupDescriptor::Known { free_rank: r1, torsion: t1 },
                AbGroupDescriptor::Known { free_rank: r2, torsion: t2 },
            ) => {
                let mut orders = t1.clone();
                orders.extend_from_slice(t2);
                AbGroupDescriptor::known(r1 + r2, &orders)
            }
        }
    }

    pub fn sum<'a>(parts: impl IntoIterator<Item = &'a Self>) -> Self {
        parts.into_iter().fold(Self::zero(), |acc, p| acc.direct_sum(p))
    }

    /// The m-fold direct power; the empty power is trivial even of Unknown.
    pub fn power(&self, m: u32) -> Self {
        if m == 0 {
            return Self::zero();
        }
        match self {
            AbGroupDescriptor::Unknown { .. } => self.clone(),
            AbGroupDescriptor::Known { free_rank, torsion } => {
                let orders: Vec<u64> =
                    std::iter::repeat_n(torsion.clone(), m as usize).flatten().collect();
                AbGroupDescriptor::known(free_rank * m, &orders)
            }
        }
    }
}

impl fmt::Display for AbGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbGroupDescriptor::Unknown { reason } => write!(f, "UNKNOWN({reason})"),
            AbGroupDescriptor::Known { free_rank, torsion } => {
                let mut parts: Vec<String> = Vec::new();
                match free_rank {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    r => parts.push(format!("Z^{r}")),
                }
                for t in torsion {
                    parts.push(format!("Z/{t}"));
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" \u{2295} "))
                }
            }
        }
    }
}

impl Serialize for AbGroupDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            AbGroupDescriptor::Known { free_rank, torsion } => {
                let mut st = s.serialize_struct("AbGroup", 3)?;
                st.serialize_field("free_rank", free_rank)?;
                st.serialize_field("torsion", torsion)?;
                st.serialize_field("rendered", &self.to_string())?;
                st.end()
            }
            AbGroupDescriptor::Unknown { reason } => {
                let mut st = s.serialize_struct("AbGroup", 1)?;
                st.serialize_field("unknown", reason)?;
                st.end()
            }
        }
    }
}
