//! Exact graded-commutative algebra over `F_p` with explicit generator
//! heights and a mandatory degree cap.
//!
//! Elements are `F_p`-linear combinations of reduced monomials (exponent
//! vectors over the ordered generator list). Reduction means: exponents below
//! each generator's height (`g^h = 0`), Koszul signs from reordering
//! odd-degree generators, and nothing above the degree cap. Products whose
//! degree would exceed the cap are reported as errors, never truncated
//! silently.

pub mod cases;
pub mod hopf;
pub mod steenrod;

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("prime must be 2 or an odd prime, got {0}")]
    BadPrime(u32),
    #[error("generator {0:?} has degree 0")]
    ZeroDegree(String),
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("odd-degree generator {0:?} must have height 2 for odd p")]
    OddHeight(String),
    #[error("height must be >= 2, got {got} for {name:?}")]
    BadHeight { name: String, got: u32 },
    #[error("no generator named {0:?}")]
    UnknownGenerator(String),
    #[error("degree cap exceeded: needed degree {degree}, cap is {cap}")]
    CapOverflow { degree: u32, cap: u32 },
    #[error("cannot parse element expression {0:?}: {1}")]
    Parse(String, String),
    #[error("element is not homogeneous (degrees {0} and {1})")]
    NotHomogeneous(u32, u32),
    #[error("missing Steenrod rule for Sq^{op} on {gen:?}")]
    MissingRule { gen: String, op: u32 },
    #[error("invalid Steenrod rule for Sq^{op} on {gen:?}: {why}")]
    BadRule { gen: String, op: u32, why: String },
    #[error("coproduct entry for {gen:?} is invalid: {why}")]
    BadCoproduct { gen: String, why: String },
}

/// Height of a generator: `Some(h)` imposes `g^h = 0`, `None` is polynomial.
pub type Height = Option<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenDef {
    pub name: String,
    pub degree: u32,
    pub height: Height,
}

impl GenDef {
    pub fn poly(name: &str, degree: u32) -> Self {
        GenDef { name: name.to_string(), degree, height: None }
    }

    pub fn truncated(name: &str, degree: u32, height: u32) -> Self {
        GenDef { name: name.to_string(), degree, height: Some(height) }
    }

    /// Exterior (simple-system) generator: square is zero.
    pub fn exterior(name: &str, degree: u32) -> Self {
        GenDef::truncated(name, degree, 2)
    }
}

/// A monomial as one exponent per generator, in generator order.
pub type Monomial = Vec<u16>;

/// A graded-commutative `F_p`-algebra presentation with a degree cap.
#[derive(Debug, Clone)]
pub struct AlgebraPresentation {
    pub name: String,
    pub prime: u32,
    gens: Vec<GenDef>,
    pub cap: u32,
}

/// Default degree cap used when none is given explicitly.
pub fn default_cap(gens: &[GenDef]) -> u32 {
    2 * gens.iter().map(|g| g.degree).max().unwrap_or(1) + 4
}

impl AlgebraPresentation {
    pub fn new(
        name: &str,
        prime: u32,
        gens: Vec<GenDef>,
        cap: u32,
    ) -> Result<Self, AlgebraError> {
        if prime < 2 || (prime > 2 && prime.is_multiple_of(2)) {
            return Err(AlgebraError::BadPrime(prime));
        }
        let mut seen = std::collections::BTreeSet::new();
        for g in &gens {
            if g.degree == 0 {
                return Err(AlgebraError::ZeroDegree(g.name.clone()));
            }
            if !seen.insert(g.name.clone()) {
                return Err(AlgebraError::DuplicateName(g.name.clone()));
            }
            if let Some(h) = g.height {
                if h < 2 {
                    return Err(AlgebraError::BadHeight { name: g.name.clone(), got: h });
                }
            }
            if prime > 2 && g.degree % 2 == 1 && g.height != Some(2) {
                return Err(AlgebraError::OddHeight(g.name.clone()));
            }
        }
        Ok(AlgebraPresentation { name: name.to_string(), prime, gens, cap })
    }

    pub fn gens(&self) -> &[GenDef] {
        &self.gens
    }

    pub fn gen_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn one_monomial(&self) -> Monomial {
        vec![0; self.gens.len()]
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.iter().zip(&self.gens).map(|(&e, g)| e as u32 * g.degree).sum()
    }

    /// Total exponent count; the filtration weight of the monomial.
    pub fn monomial_weight(&self, m: &Monomial) -> u32 {
        m.iter().map(|&e| e as u32).sum()
    }

    fn coeff(&self, c: i64) -> u32 {
        c.rem_euclid(self.prime as i64) as u32
    }

    /// Koszul sign for multiplying monomial `a` by monomial `b` (in that
    /// order): each odd generator of `b` moves left past the later odd
    /// generators of `a`.
    fn koszul_sign(&self, a: &Monomial, b: &Monomial) -> i64 {
        if self.prime == 2 {
            return 1;
        }
        let mut swaps: u64 = 0;
        let odd: Vec<bool> = self.gens.iter().map(|g| g.degree % 2 == 1).collect();
        for i in 0..self.gens.len() {
            if !odd[i] || b[i] == 0 {
                continue;
            }
            let later_odds: u64 = (i + 1..self.gens.len())
                .filter(|&j| odd[j])
                .map(|j| a[j] as u64)
                .sum();
            swaps += b[i] as u64 * later_odds;
        }
        if swaps.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn mul_monomials(
        &self,
        a: &Monomial,
        b: &Monomial,
    ) -> Result<Option<(Monomial, i64)>, AlgebraError> {
        let mut out = self.one_monomial();
        for (i, g) in self.gens.iter().enumerate() {
            let e = a[i] as u32 + b[i] as u32;
            if let Some(h) = g.height {
                if e >= h {
                    return Ok(None); // killed by the truncation relation
                }
            }
            out[i] = e as u16;
        }
        let degree = self.monomial_degree(&out);
        if degree > self.cap {
            return Err(AlgebraError::CapOverflow { degree, cap: self.cap });
        }
        Ok(Some((out, self.koszul_sign(a, b))))
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement { terms: BTreeMap::new() }
    }

    pub fn one(&self) -> AlgElement {
        AlgElement { terms: BTreeMap::from([(self.one_monomial(), 1)]) }
    }

    pub fn gen_elt(&self, idx: usize) -> AlgElement {
        let mut m = self.one_monomial();
        m[idx] = 1;
        AlgElement { terms: BTreeMap::from([(m, 1)]) }
    }

    pub fn monomial_elt(&self, pairs: &[(usize, u16)]) -> AlgElement {
        let mut m = self.one_monomial();
        for &(i, e) in pairs {
            m[i] = e;
        }
        AlgElement { terms: BTreeMap::from([(m, 1)]) }
    }

    pub fn add(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut terms = a.terms.clone();
        for (m, &c) in &b.terms {
            let e = terms.entry(m.clone()).or_insert(0);
            *e = (*e + c) % self.prime;
            if *e == 0 {
                terms.remove(m);
            }
        }
        AlgElement { terms }
    }

    pub fn scale(&self, c: i64, a: &AlgElement) -> AlgElement {
        let c = self.coeff(c);
        let mut terms = BTreeMap::new();
        if c != 0 {
            for (m, &x) in &a.terms {
                let v = (x * c) % self.prime;
                if v != 0 {
                    terms.insert(m.clone(), v);
                }
            }
        }
        AlgElement { terms }
    }

    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement, AlgebraError> {
        let mut out = self.zero();
        for (ma, &ca) in &a.terms {
            for (mb, &cb) in &b.terms {
                if let Some((m, sign)) = self.mul_monomials(ma, mb)? {
                    let c = self.coeff(sign * (ca as i64) * (cb as i64));
                    let single = AlgElement { terms: BTreeMap::from([(m, 1)]) };
                    out = self.add(&out, &self.scale(c as i64, &single));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, a: &AlgElement, e: u32) -> Result<AlgElement, AlgebraError> {
        let mut out = self.one();
        for _ in 0..e {
            out = self.mul(&out, a)?;
        }
        Ok(out)
    }

    /// Degree of a homogeneous element; `None` for zero.
    pub fn degree_of(&self, a: &AlgElement) -> Result<Option<u32>, AlgebraError> {
        let mut deg = None;
        for m in a.terms.keys() {
            let d = self.monomial_degree(m);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Err(AlgebraError::NotHomogeneous(prev, d)),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Coefficient of a single monomial in the reduced normal form.
    pub fn contains_term(&self, a: &AlgElement, m: &Monomial) -> u32 {
        a.terms.get(m).copied().unwrap_or(0)
    }

    /// Image in the module of indecomposables: coefficients of the length-one
    /// monomials, keyed by generator index.
    pub fn indecomposable_part(&self, a: &AlgElement) -> QElement {
        let mut coords = BTreeMap::new();
        for (m, &c) in &a.terms {
            if self.monomial_weight(m) == 1 {
                let idx = m.iter().position(|&e| e == 1).expect("weight one");
                coords.insert(idx, c);
            }
        }
        QElement { coords }
    }

    /// Basis of generator indices in a given degree (the degree-d part of QA
    /// for presentations whose relations are decomposable).
    pub fn generators_in_degree(&self, d: u32) -> Vec<usize> {
        (0..self.gens.len()).filter(|&i| self.gens[i].degree == d).collect()
    }

    /// All reduced monomials of the given degree (enumerable since heights
    /// and the cap bound exponents).
    pub fn monomial_basis(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = self.one_monomial();
        self.enumerate(0, degree, &mut current, &mut out);
        out
    }

    fn enumerate(&self, idx: usize, remaining: u32, current: &mut Monomial, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        if idx >= self.gens.len() {
            return;
        }
        let g = &self.gens[idx];
        let max_e = match g.height {
            Some(h) => h - 1,
            None => remaining / g.degree,
        };
        for e in 0..=max_e.min(remaining / g.degree) {
            current[idx] = e as u16;
            self.enumerate(idx + 1, remaining - e * g.degree, current, out);
        }
        current[idx] = 0;
    }

    pub fn render(&self, a: &AlgElement) -> String {
        if a.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, &c) in &a.terms {
            let mut factors = Vec::new();
            if c != 1 || self.monomial_weight(m) == 0 {
                factors.push(c.to_string());
            }
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.gens[i].name.clone()),
                    _ => factors.push(format!("{}^{}", self.gens[i].name, e)),
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }

    /// Parse sums of monomials like `x2*x4 + 2*x8^3 - x3` (minus allowed for
    /// odd p).
    pub fn parse_element(&self, text: &str) -> Result<AlgElement, AlgebraError> {
        let err = |why: &str| AlgebraError::Parse(text.to_string(), why.to_string());
        let mut out = self.zero();
        let normalized = text.replace('-', "+-");
        for term in normalized.split('+') {
            let term = term.trim();
            if term.is_empty() {
                continue;
            }
            let (sign, term) = match term.strip_prefix('-') {
                Some(rest) => (-1i64, rest.trim()),
                None => (1i64, term),
            };
            if term == "0" {
                continue;
            }
            let mut coeff: i64 = sign;
            let mut mono = self.one_monomial();
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                if let Ok(c) = factor.parse::<i64>() {
                    coeff *= c;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        (n.trim(), e.trim().parse::<u16>().map_err(|_| err("bad exponent"))?)
                    }
                    None => (factor, 1),
                };
                let idx = self.gen_index(name)?;
                mono[idx] = mono[idx].checked_add(exp).ok_or_else(|| err("exponent overflow"))?;
            }
            // reduce through a real multiplication so heights and cap apply
            let mut elt = self.one();
            for (i, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    elt = self.mul(&elt, &self.gen_elt(i))?;
                }
            }
            out = self.add(&out, &self.scale(coeff, &elt));
        }
        Ok(out)
    }
}

/// A reduced element of an [`AlgebraPresentation`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgElement {
    pub(crate) terms: BTreeMap<Monomial, u32>,
}

impl AlgElement {
    /// A single monomial with coefficient 1.
    pub fn from_monomial(m: Monomial) -> Self {
        AlgElement { terms: BTreeMap::from([(m, 1)]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

/// An element of the module of indecomposables QA, as coordinates on the
/// degree-matching generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QElement {
    pub coords: BTreeMap<usize, u32>,
}

impl QElement {
    pub fn is_zero(&self) -> bool {
        self.coords.values().all(|&c| c == 0)
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.coords.iter().map(|(i, c)| format!("{c}*g{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly2(names: &[(&str, u32)]) -> AlgebraPresentation {
        let gens = names.iter().map(|(n, d)| GenDef::poly(n, *d)).collect();
        AlgebraPresentation::new("test", 2, gens, 40).unwrap()
    }

    #[test]
    fn multiplication_reduces_heights() {
        let alg = AlgebraPresentation::new(
            "trunc",
            2,
            vec![GenDef::truncated("v", 1, 4), GenDef::exterior("u", 3)],
            20,
        )
        .unwrap();
        let v = alg.gen_elt(0);
        let v3 = alg.pow(&v, 3).unwrap();
        assert!(!v3.is_zero());
        assert!(alg.pow(&v, 4).unwrap().is_zero());
        let u = alg.gen_elt(1);
        assert!(alg.mul(&u, &u).unwrap().is_zero());
    }

    #[test]
    fn koszul_signs_in_char_three() {
        let alg = AlgebraPresentation::new(
            "signs",
            3,
            vec![GenDef::exterior("a", 1), GenDef::exterior("b", 3), GenDef::poly("x", 2)],
            20,
        )
        .unwrap();
        let a = alg.gen_elt(0);
        let b = alg.gen_elt(1);
        let ab = alg.mul(&a, &b).unwrap();
        let ba = alg.mul(&b, &a).unwrap();
        // odd * odd anticommute
        assert_eq!(alg.scale(-1, &ab), ba);
        let x = alg.gen_elt(2);
        assert_eq!(alg.mul(&a, &x).unwrap(), alg.mul(&x, &a).unwrap());
    }

    #[test]
    fn cap_overflow_is_an_error() {
        let alg = AlgebraPresentation::new("small", 2, vec![GenDef::poly("w", 6)], 10).unwrap();
        let w = alg.gen_elt(0);
        match alg.mul(&w, &w) {
            Err(AlgebraError::CapOverflow { degree: 12, cap: 10 }) => {}
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn indecomposables() {
        let alg = poly2(&[("w2", 2), ("w4", 4), ("w6", 6)]);
        let w2w4 = alg.parse_element("w2*w4").unwrap();
        assert!(alg.indecomposable_part(&w2w4).is_zero());
        let e = alg.parse_element("w6 + w2*w4").unwrap();
        let q = alg.indecomposable_part(&e);
        assert_eq!(q.coords, BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn parse_and_render_round_trip() {
        let alg = poly2(&[("w2", 2), ("w3", 3), ("w4", 4)]);
        let e = alg.parse_element("w2^2*w4 + w3*w2 + w4").unwrap();
        let rendered = alg.render(&e);
        let reparsed = alg.parse_element(&rendered).unwrap();
        assert_eq!(e, reparsed);
        // char 2: x + x = 0
        assert!(alg.parse_element("w2 + w2").unwrap().is_zero());
    }

    #[test]
    fn monomial_basis_enumeration() {
        let alg = AlgebraPresentation::new(
            "basis",
            2,
            vec![GenDef::truncated("v", 1, 4), GenDef::exterior("u1", 1), GenDef::exterior("u2", 2)],
            20,
        )
        .unwrap();
        // degree 2: v^2, v*u1, u2
        assert_eq!(alg.monomial_basis(2).len(), 3);
        // degree 3: v^3, v^2 u1, v u2, u1 u2
        assert_eq!(alg.monomial_basis(3).len(), 4);
    }

    #[test]
    fn contains_term_mismatched_degree_is_zero() {
        let alg = poly2(&[("w2", 2), ("w4", 4)]);
        let e = alg.parse_element("w2*w4").unwrap();
        let w2 = alg.monomial_elt(&[(0, 1)]);
        let m = w2.terms.keys().next().unwrap().clone();
        assert_eq!(alg.contains_term(&e, &m), 0);
    }
}
