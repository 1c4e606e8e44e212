//! Presentations `G = (S^1 x H)/C` of compact connected Lie groups with
//! infinite cyclic fundamental group, and the invariant `s(G) = |p2(C)|`.
//!
//! `H` is a product of simply-connected simple factors and `C` is a finite
//! central subgroup given by generators. Validity means the circle projection
//! `p1` is injective on `C`, which is exactly the condition `pi_1(G) = Z`:
//! the torsion of `pi_1((S^1 x H)/C)` is `C` intersected with `1 x Z(H)`.
//! In particular a valid `C` embeds in the circle, so it is cyclic.

use crate::abelian::{Elt, FinAbGroup};
use crate::catalog::{CatalogError, SimpleType};
use num_integer::Integer;
use num_rational::Ratio;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Hard cap on the closure enumeration; valid inputs stay far below this.
const MAX_SUBGROUP: usize = 1 << 20;

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Abelian(#[from] crate::abelian::AbelianError),
    #[error("generator has {got} center components, presentation has {want} factors")]
    ArityMismatch { got: usize, want: usize },
    #[error("circle part must have a positive denominator")]
    ZeroDenominator,
}

/// Why a presentation fails the `pi_1 = Z` requirement.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Diagnostic {
    #[error("factor list is empty")]
    EmptyFactors,
    #[error("C contains a nontrivial element of 1 x Z(H): {element}; pi_1 of the quotient acquires torsion")]
    CentralTorsion { element: String },
    #[error("generated subgroup C exceeds {limit} elements")]
    SubgroupTooLarge { limit: usize },
}

/// An element of the center `S^1 x Z(H)`: a rational circle coordinate
/// `a/m` in `[0,1)` (meaning `e^{2 pi i a/m}`) and one exponent vector per
/// simple factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CentralElement {
    pub circle: Ratio<u64>,
    pub parts: Vec<Elt>,
}

impl CentralElement {
    pub fn new(num: u64, den: u64, parts: Vec<Elt>) -> Result<Self, PresentationError> {
        if den == 0 {
            return Err(PresentationError::ZeroDenominator);
        }
        Ok(CentralElement { circle: Ratio::new(num % den, den), parts })
    }

    pub fn is_identity(&self) -> bool {
        *self.circle.numer() == 0 && self.parts.iter().all(|p| p.iter().all(|&x| x == 0))
    }
}

/// `G = (S^1 x H)/C` with `H` the product of `factors` and `C` generated by
/// `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    factors: Vec<SimpleType>,
    generators: Vec<CentralElement>,
}

impl GroupPresentation {
    /// Build and shape-check a presentation. Validity of `pi_1 = Z` is a
    /// separate step, [`validate`].
    pub fn new(
        factors: Vec<SimpleType>,
        generators: Vec<CentralElement>,
    ) -> Result<Self, PresentationError> {
        for f in &factors {
            f.validate()?;
        }
        let centers: Vec<FinAbGroup> = factors.iter().map(SimpleType::center).collect();
        let mut reduced = Vec::with_capacity(generators.len());
        for g in generators {
            if g.parts.len() != factors.len() {
                return Err(PresentationError::ArityMismatch {
                    got: g.parts.len(),
                    want: factors.len(),
                });
            }
            let parts = g
                .parts
                .into_iter()
                .zip(&centers)
                .map(|(p, c)| c.reduce(p))
                .collect::<Result<Vec<_>, _>>()?;
            reduced.push(CentralElement { circle: g.circle, parts });
        }
        Ok(GroupPresentation { factors, generators: reduced })
    }

    /// The `U(n)` presentation: `(S^1 x SU(n)) / <(1/n; c)>`.
    pub fn u(n: u32) -> Result<Self, PresentationError> {
        GroupPresentation::new(
            vec![SimpleType::SU(n)],
            vec![CentralElement::new(1, n as u64, vec![vec![1]])?],
        )
    }

    /// `S^1 x H` with trivial `C`.
    pub fn circle_times(factors: Vec<SimpleType>) -> Result<Self, PresentationError> {
        GroupPresentation::new(factors, Vec::new())
    }

    /// `S^1 x_{Z/m} H` for a single factor: `C = <(1/m; g)>` where `g` is a
    /// named generator of the factor's center (for example `c`, `z`, `d`,
    /// `d-`).
    pub fn circle_mod(m: u64, factor: SimpleType, gen_name: &str) -> Result<Self, PresentationError> {
        factor.validate()?;
        let g = factor.center().named(gen_name)?;
        GroupPresentation::new(vec![factor], vec![CentralElement::new(1, m, vec![g])?])
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn generators(&self) -> &[CentralElement] {
        &self.generators
    }
}

/// A presentation that passed [`validate`], along with the enumerated
/// subgroup `C` and the per-factor centers.
#[derive(Debug, Clone)]
pub struct Validated {
    presentation: GroupPresentation,
    centers: Vec<FinAbGroup>,
    c_elements: Vec<CentralElement>,
}

/// Check `pi_1(G) = Z`, i.e. injectivity of `p1` on the generated subgroup.
pub fn validate(p: &GroupPresentation) -> Result<Validated, Diagnostic> {
    if p.factors.is_empty() {
        return Err(Diagnostic::EmptyFactors);
    }
    let centers: Vec<FinAbGroup> = p.factors.iter().map(SimpleType::center).collect();
    let add = |a: &CentralElement, b: &CentralElement| -> CentralElement {
        let circle = (a.circle + b.circle).fract();
        let parts =
            a.parts.iter().zip(&b.parts).zip(&centers).map(|((x, y), c)| c.add(x, y)).collect();
        CentralElement { circle, parts }
    };
    let identity = CentralElement {
        circle: Ratio::new(0, 1),
        parts: centers.iter().map(FinAbGroup::zero).collect(),
    };
    let mut set: BTreeSet<CentralElement> = BTreeSet::new();
    set.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(x) = frontier.pop() {
        for g in &p.generators {
            let y = add(&x, g);
            if set.insert(y.clone()) {
                if set.len() > MAX_SUBGROUP {
                    return Err(Diagnostic::SubgroupTooLarge { limit: MAX_SUBGROUP });
                }
                frontier.push(y);
            }
        }
    }
    // p1 injective on C <=> no nontrivial element sits over circle coordinate 0
    for e in &set {
        if *e.circle.numer() == 0 && !e.is_identity() {
            return Err(Diagnostic::CentralTorsion { element: format_element(&centers, e) });
        }
    }
    Ok(Validated { presentation: p.clone(), centers, c_elements: set.into_iter().collect() })
}

fn format_element(centers: &[FinAbGroup], e: &CentralElement) -> String {
    let mut parts = vec![format!("{}/{}", e.circle.numer(), e.circle.denom())];
    for (c, p) in centers.iter().zip(&e.parts) {
        let named = c
            .named_elements()
            .iter()
            .find(|(_, v)| v == p)
            .map(|(n, _)| n.clone());
        let shown = match named {
            Some(n) => n,
            None if c.is_trivial() => "1".to_string(),
            None if p.iter().all(|&x| x == 0) => "1".to_string(),
            None => {
                let base = c.named_elements().first().map(|(n, _)| n.clone());
                match (base, c.factors().len()) {
                    (Some(b), 1) => format!("{b}^{}", p[0]),
                    _ => format!("{p:?}"),
                }
            }
        };
        parts.push(shown);
    }
    format!("({})", parts.join("; "))
}

impl Validated {
    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn factors(&self) -> &[SimpleType] {
        self.presentation.factors()
    }

    pub fn centers(&self) -> &[FinAbGroup] {
        &self.centers
    }

    /// All elements of the generated subgroup `C`.
    pub fn c_elements(&self) -> &[CentralElement] {
        &self.c_elements
    }

    pub fn c_order(&self) -> u64 {
        self.c_elements.len() as u64
    }

    pub fn p1_order(&self) -> u64 {
        self.c_elements.iter().map(|e| e.circle).collect::<BTreeSet<_>>().len() as u64
    }

    /// `s(G) = |p2(C)|`, by exact enumeration of the projection to `Z(H)`.
    pub fn s_invariant(&self) -> u64 {
        let projections: BTreeSet<&Vec<Elt>> = self.c_elements.iter().map(|e| &e.parts).collect();
        let s = projections.len() as u64;
        let via_lcm = self.factor_orders().into_iter().fold(1, |a, b| a.lcm(&b));
        assert_eq!(s, via_lcm, "|p2(C)| must equal lcm of the factor orders");
        s
    }

    /// Orders `s_i = |q_i(C)|` of the per-factor projections of `C`.
    pub fn factor_orders(&self) -> Vec<u64> {
        (0..self.factors().len())
            .map(|j| {
                self.c_elements.iter().map(|e| &e.parts[j]).collect::<BTreeSet<_>>().len() as u64
            })
            .collect()
    }

    /// Invariant factors of the subgroup `p2(C)` of `Z(H)`.
    pub fn p2_invariant_factors(&self) -> Vec<u64> {
        let projections: BTreeSet<&Vec<Elt>> = self.c_elements.iter().map(|e| &e.parts).collect();
        let orders: Vec<u64> = projections
            .iter()
            .map(|parts| {
                parts
                    .iter()
                    .zip(&self.centers)
                    .map(|(p, c)| c.order_of(p))
                    .fold(1, |a, b| a.lcm(&b))
            })
            .collect();
        crate::abelian::invariant_factors_from_element_orders(&orders)
    }

    /// Replace `C` by an equivalent subgroup with `|p1(C)| = s(G)`.
    ///
    /// `C2 = s(G) C` lies in `S^1 x 1`; collapsing it rescales the circle by
    /// `t = |C2|`, so the new generators are `(t a; v)` for generators
    /// `(a; v)` of `C`.
    pub fn canonicalize(&self) -> Validated {
        let s = self.s_invariant();
        let c2: BTreeSet<Ratio<u64>> = self
            .c_elements
            .iter()
            .map(|e| (e.circle * Ratio::from_integer(s)).fract())
            .collect();
        debug_assert!(
            self.c_elements
                .iter()
                .all(|e| e.parts.iter().zip(&self.centers).all(|(p, c)| c.scale(s, p) == c.zero())),
            "s(G) C must project trivially to Z(H)"
        );
        let t = c2.len() as u64;
        let generators = self
            .presentation
            .generators
            .iter()
            .map(|g| CentralElement {
                circle: (g.circle * Ratio::from_integer(t)).fract(),
                parts: g.parts.clone(),
            })
            .collect();
        let p = GroupPresentation { factors: self.factors().to_vec(), generators };
        let v = validate(&p).expect("canonical presentation stays valid");
        debug_assert_eq!(v.s_invariant(), s);
        debug_assert_eq!(v.factor_orders(), self.factor_orders());
        v
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(S1")?;
        for t in &self.factors {
            write!(f, " x {t}")?;
        }
        write!(f, ") / <")?;
        let centers: Vec<FinAbGroup> = self.factors.iter().map(SimpleType::center).collect();
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", render_generator(&self.factors, &centers, g))?;
        }
        write!(f, ">")
    }
}

/// Grammar-compatible rendering of one generator of `C`.
pub fn render_generator(
    factors: &[SimpleType],
    centers: &[FinAbGroup],
    g: &CentralElement,
) -> String {
    let mut out = format!("({}/{}", g.circle.numer(), g.circle.denom());
    for (idx, ((f, c), p)) in factors.iter().zip(centers).zip(&g.parts).enumerate() {
        out.push_str(if idx == 0 { "; " } else { ", " });
        match f {
            SimpleType::Spin(n) if n % 4 == 0 => {
                let name = c
                    .named_elements()
                    .iter()
                    .find(|(_, v)| v == p)
                    .map(|(n, _)| n.as_str())
                    .unwrap_or("1");
                let name = if p.iter().all(|&x| x == 0) { "1" } else { name };
                out.push_str(name);
            }
            _ => {
                let e = p.first().copied().unwrap_or(0);
                out.push_str(&e.to_string());
            }
        }
    }
    out.push(')');
    out
}
