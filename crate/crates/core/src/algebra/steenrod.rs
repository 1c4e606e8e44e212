//! Steenrod squares: per-generator rules with a Cartan-formula extension,
//! and the Wu formula on the Stiefel-Whitney generators of `H^*(BSO(n); F_2)`.

use super::{AlgElement, AlgebraError, AlgebraPresentation, GenDef, Monomial};
use std::collections::BTreeMap;

/// Binomial coefficient mod 2 by Lucas: nonzero iff `k`'s bits sit inside
/// `top`'s. Conventions for the Wu formula corner: `binom(a, 0) = 1` for any
/// `a`, and `binom(a, k) = 0` for `a < 0`, `k >= 1`.
pub fn binom_mod2(top: i64, k: u32) -> u32 {
    if k == 0 {
        return 1;
    }
    if top < 0 {
        return 0;
    }
    let (t, k) = (top as u64, k as u64);
    if k > t {
        return 0;
    }
    u32::from(k & t == k)
}

/// Binomial coefficient mod a prime by Lucas' theorem.
pub fn binom_mod_p(mut top: u64, mut k: u64, p: u64) -> u64 {
    if k > top {
        return 0;
    }
    let mut out = 1u64;
    while k > 0 || top > 0 {
        let (td, kd) = (top % p, k % p);
        if kd > td {
            return 0;
        }
        // small-case exact binomial of digits
        let mut digit = 1u64;
        for i in 0..kd {
            digit = digit * (td - i) / (i + 1);
        }
        out = out * (digit % p) % p;
        top /= p;
        k /= p;
    }
    out
}

/// `H^*(BSO(n); F_2) = F_2[w_2, ..., w_n]` with the Wu-formula Steenrod
/// action.
#[derive(Debug, Clone)]
pub struct Bso {
    pub alg: AlgebraPresentation,
    pub n: u32,
}

impl Bso {
    pub fn new(n: u32, cap: Option<u32>) -> Result<Self, AlgebraError> {
        assert!(n >= 2, "BSO(n) needs n >= 2");
        let gens: Vec<GenDef> =
            (2..=n).map(|j| GenDef::poly(&format!("w{j}"), j)).collect();
        let cap = cap.unwrap_or_else(|| super::default_cap(&gens));
        let alg = AlgebraPresentation::new(&format!("BSO({n})"), 2, gens, cap)?;
        Ok(Bso { alg, n })
    }

    /// The class `w_j`, with `w_0 = 1`, `w_1 = 0` and `w_j = 0` for `j > n`.
    pub fn w(&self, j: u32) -> AlgElement {
        match j {
            0 => self.alg.one(),
            1 => self.alg.zero(),
            j if j > self.n => self.alg.zero(),
            j => self.alg.gen_elt((j - 2) as usize),
        }
    }

    /// Wu formula: `Sq^i w_j = sum_k binom(j+k-i-1, k) w_{i-k} w_{j+k}`,
    /// reduced. For `i > j` the square vanishes by instability.
    pub fn wu_sq(&self, i: u32, j: u32) -> Result<AlgElement, AlgebraError> {
        assert!((2..=self.n).contains(&j), "need 2 <= j <= n");
        if i > j {
            return Ok(self.alg.zero());
        }
        if i + j > self.alg.cap {
            return Err(AlgebraError::CapOverflow { degree: i + j, cap: self.alg.cap });
        }
        let mut out = self.alg.zero();
        for k in 0..=i {
            let c = binom_mod2(j as i64 + k as i64 - i as i64 - 1, k);
            if c == 0 {
                continue;
            }
            let term = self.alg.mul(&self.w(i - k), &self.w(j + k))?;
            out = self.alg.add(&out, &term);
        }
        Ok(out)
    }

    /// The full Steenrod rule `Sq^i w_j` for `1 <= i <= j`, within the cap.
    pub fn steenrod_rule(&self) -> Result<SteenrodRule, AlgebraError> {
        let mut entries = BTreeMap::new();
        for j in 2..=self.n {
            for i in 1..=j {
                if i + j > self.alg.cap {
                    continue;
                }
                entries.insert(((j - 2) as usize, i), self.wu_sq(i, j)?);
            }
        }
        SteenrodRule::new(&self.alg, entries)
    }
}

/// Squares on generators; everything else follows from the Cartan formula.
#[derive(Debug, Clone)]
pub struct SteenrodRule {
    entries: BTreeMap<(usize, u32), AlgElement>,
}

impl SteenrodRule {
    /// Validates the axioms on the provided entries: `Sq^0 g = g`,
    /// `Sq^{|g|} g = g^2`, `Sq^i g = 0` for `i > |g|`, and homogeneity.
    pub fn new(
        alg: &AlgebraPresentation,
        entries: BTreeMap<(usize, u32), AlgElement>,
    ) -> Result<Self, AlgebraError> {
        for ((g, i), val) in &entries {
            let gen = &alg.gens()[*g];
            let expect_deg = gen.degree + i;
            if let Some(d) = alg.degree_of(val)? {
                if d != expect_deg {
                    return Err(AlgebraError::BadRule {
                        gen: gen.name.clone(),
                        op: *i,
                        why: format!("degree {d}, expected {expect_deg}"),
                    });
                }
            }
            if *i == 0 && *val != alg.gen_elt(*g) {
                return Err(AlgebraError::BadRule {
                    gen: gen.name.clone(),
                    op: 0,
                    why: "Sq^0 must be the identity".to_string(),
                });
            }
            if *i == gen.degree {
                let square = alg.mul(&alg.gen_elt(*g), &alg.gen_elt(*g))?;
                if *val != square {
                    return Err(AlgebraError::BadRule {
                        gen: gen.name.clone(),
                        op: *i,
                        why: "top square must be g^2".to_string(),
                    });
                }
            }
            if *i > gen.degree && !val.is_zero() {
                return Err(AlgebraError::BadRule {
                    gen: gen.name.clone(),
                    op: *i,
                    why: "squares above the degree vanish".to_string(),
                });
            }
        }
        Ok(SteenrodRule { entries })
    }

    /// `Sq^i` on one generator, with the axioms filling the gaps: identity at
    /// `i = 0`, `g^2` at `i = |g|`, zero above.
    pub fn on_generator(
        &self,
        alg: &AlgebraPresentation,
        g: usize,
        i: u32,
    ) -> Result<AlgElement, AlgebraError> {
        let deg = alg.gens()[g].degree;
        if i == 0 {
            return Ok(alg.gen_elt(g));
        }
        if i > deg {
            return Ok(alg.zero());
        }
        if let Some(v) = self.entries.get(&(g, i)) {
            return Ok(v.clone());
        }
        if i == deg {
            return alg.mul(&alg.gen_elt(g), &alg.gen_elt(g));
        }
        Err(AlgebraError::MissingRule { gen: alg.gens()[g].name.clone(), op: i })
    }

    /// `Sq^k` on an element through the Cartan formula
    /// `Sq^k(ab) = sum_{i+j=k} Sq^i(a) Sq^j(b)`.
    pub fn sq(
        &self,
        alg: &AlgebraPresentation,
        k: u32,
        e: &AlgElement,
    ) -> Result<AlgElement, AlgebraError> {
        let mut memo: BTreeMap<(Monomial, u32), AlgElement> = BTreeMap::new();
        let mut out = alg.zero();
        for (m, c) in e.terms() {
            let sq_m = self.sq_monomial(alg, k, m, &mut memo)?;
            out = alg.add(&out, &alg.scale(c as i64, &sq_m));
        }
        Ok(out)
    }

    fn sq_monomial(
        &self,
        alg: &AlgebraPresentation,
        k: u32,
        m: &Monomial,
        memo: &mut BTreeMap<(Monomial, u32), AlgElement>,
    ) -> Result<AlgElement, AlgebraError> {
        if let Some(hit) = memo.get(&(m.clone(), k)) {
            return Ok(hit.clone());
        }
        let weight: u32 = m.iter().map(|&e| e as u32).sum();
        let result = if weight == 0 {
            if k == 0 {
                alg.one()
            } else {
                alg.zero()
            }
        } else {
            // split off one generator factor and recurse
            let g = m.iter().position(|&e| e > 0).expect("positive weight");
            let mut rest = m.clone();
            rest[g] -= 1;
            let gdeg = alg.gens()[g].degree;
            let mut acc = alg.zero();
            for a in 0..=k.min(gdeg) {
                let left = self.on_generator(alg, g, a)?;
                if left.is_zero() {
                    continue;
                }
                let right = self.sq_monomial(alg, k - a, &rest, memo)?;
                if right.is_zero() {
                    continue;
                }
                acc = alg.add(&acc, &alg.mul(&left, &right)?);
            }
            acc
        };
        memo.insert((m.clone(), k), result.clone());
        Ok(result)
    }
}

/// One congruence case of the decomposability lemma for `Sq^theta w_i` in
/// `H^*(BSO(n); F_2)`.
#[derive(Debug, Clone)]
pub struct SqLemmaReport {
    pub n: u32,
    pub congruence: &'static str,
    pub theta: u32,
    /// `(class index j, Sq^theta w_j is decomposable)`.
    pub decomposable: Vec<(u32, bool)>,
    pub flagged_class: u32,
    /// The product `w_a w_b` that must appear in the flagged square.
    pub flagged_term: (u32, u32),
    pub flagged_contains: bool,
}

impl SqLemmaReport {
    pub fn pass(&self) -> bool {
        self.flagged_contains && self.decomposable.iter().all(|(_, ok)| *ok)
    }
}

/// Verify the congruence-case lemma on `Sq^theta` applied to the stated
/// Stiefel-Whitney classes, entirely through the Wu formula.
pub fn verify_sq_w_case(n: u32) -> Result<SqLemmaReport, AlgebraError> {
    assert!(n >= 7, "cases are stated for n >= 7");
    let (congruence, theta, classes, flagged, term) = if n.is_multiple_of(4) || n % 4 == 1 {
        ("n = 0,1 mod 4", 2, [n - 3, n - 1], n - 1, (2, n - 1))
    } else if n % 8 == 2 {
        ("n = 2 mod 8", 5, [n - 4, n - 9], n - 4, (2, n - 1))
    } else if n % 8 == 6 {
        ("n = 6 mod 8", 3, [n - 2, n - 4], n - 2, (2, n - 1))
    } else {
        ("n = 3 mod 4", 2, [n - 2, n], n, (2, n))
    };
    let bso = Bso::new(n, None)?;
    let mut decomposable = Vec::new();
    let mut flagged_contains = false;
    for j in classes {
        let sq = if j < 2 { bso.alg.zero() } else { bso.wu_sq(theta, j)? };
        decomposable.push((j, bso.alg.indecomposable_part(&sq).is_zero()));
        if j == flagged {
            let target = bso.alg.mul(&bso.w(term.0), &bso.w(term.1))?;
            let target_mono = target.terms().next().map(|(m, _)| m.clone());
            flagged_contains = match target_mono {
                Some(m) => bso.alg.contains_term(&sq, &m) == 1,
                None => false,
            };
        }
    }
    Ok(SqLemmaReport {
        n,
        congruence,
        theta,
        decomposable,
        flagged_class: flagged,
        flagged_term: term,
        flagged_contains,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wu_anchor_values() {
        let b5 = Bso::new(5, None).unwrap();
        let expect = b5.alg.parse_element("w2*w4").unwrap();
        assert_eq!(b5.wu_sq(2, 4).unwrap(), expect);

        let b12 = Bso::new(12, None).unwrap();
        let expect = b12.alg.parse_element("w2*w6").unwrap();
        assert_eq!(b12.wu_sq(2, 6).unwrap(), expect);
    }

    #[test]
    fn wu_top_square_axiom() {
        for n in [5u32, 8, 12] {
            let b = Bso::new(n, None).unwrap();
            for j in 2..=n.min(6) {
                let sq = b.wu_sq(j, j).unwrap();
                let square = b.alg.mul(&b.w(j), &b.w(j)).unwrap();
                assert_eq!(sq, square, "Sq^{j} w_{j} in BSO({n})");
            }
        }
    }

    #[test]
    fn wu_hand_expanded_table() {
        // independent hand expansions, j <= 6 in BSO(12)
        let b = Bso::new(12, None).unwrap();
        let cases = [
            (1u32, 2u32, "w3"),
            (1, 3, "0"),
            (1, 4, "w5"),
            (1, 5, "0"),
            (1, 6, "w7"),
            (2, 4, "w2*w4 + w6"),
            (2, 5, "w2*w5"),
            (2, 6, "w2*w6"),
            (3, 4, "w3*w4 + w2*w5 + w7"),
            (3, 6, "w3*w6 + w2*w7"),
        ];
        for (i, j, expect) in cases {
            let got = b.wu_sq(i, j).unwrap();
            assert_eq!(got, b.alg.parse_element(expect).unwrap(), "Sq^{i} w_{j}");
        }
    }

    #[test]
    fn cartan_extension_example() {
        // Sq^2(w2 w4) in BSO(12) reduces to w3 w5 + w2 w6
        let b = Bso::new(12, None).unwrap();
        let rule = b.steenrod_rule().unwrap();
        let w2w4 = b.alg.parse_element("w2*w4").unwrap();
        let got = rule.sq(&b.alg, 2, &w2w4).unwrap();
        assert_eq!(got, b.alg.parse_element("w3*w5 + w2*w6").unwrap());
    }

    #[test]
    fn rule_agrees_with_wu_on_generators() {
        let b = Bso::new(12, None).unwrap();
        let rule = b.steenrod_rule().unwrap();
        let got = rule.sq(&b.alg, 2, &b.w(6)).unwrap();
        assert_eq!(got, b.wu_sq(2, 6).unwrap());
    }

    #[test]
    fn sq_zero_is_identity() {
        let b = Bso::new(8, None).unwrap();
        let rule = b.steenrod_rule().unwrap();
        let e = b.alg.parse_element("w2*w3 + w5").unwrap();
        assert_eq!(rule.sq(&b.alg, 0, &e).unwrap(), e);
    }

    #[test]
    fn instability_vanishing() {
        let b = Bso::new(8, None).unwrap();
        assert!(b.wu_sq(5, 4).unwrap().is_zero());
        let rule = b.steenrod_rule().unwrap();
        assert!(rule.on_generator(&b.alg, 0, 3).unwrap().is_zero()); // Sq^3 w2
    }

    #[test]
    fn sq_lemma_all_cases() {
        for n in 7..=24 {
            let report = verify_sq_w_case(n).unwrap();
            assert!(report.pass(), "n = {n}: {report:?}");
        }
    }

    #[test]
    fn sq_lemma_case_details() {
        let r = verify_sq_w_case(13).unwrap();
        assert_eq!((r.theta, r.flagged_class, r.flagged_term), (2, 12, (2, 12)));
        let r = verify_sq_w_case(10).unwrap();
        assert_eq!((r.theta, r.flagged_class, r.flagged_term), (5, 6, (2, 9)));
        assert_eq!(r.decomposable, vec![(6, true), (1, true)]);
        let r = verify_sq_w_case(14).unwrap();
        assert_eq!((r.theta, r.flagged_class), (3, 12));
        let r = verify_sq_w_case(11).unwrap();
        assert_eq!((r.theta, r.flagged_class, r.flagged_term), (2, 11, (2, 11)));
    }

    #[test]
    fn lucas_spot_checks() {
        assert_eq!(binom_mod2(-1, 0), 1);
        assert_eq!(binom_mod2(-2, 0), 1);
        assert_eq!(binom_mod2(-1, 3), 0);
        assert_eq!(binom_mod2(9, 2), 0); // 36
        assert_eq!(binom_mod2(11, 3), 1); // 165
        assert_eq!(binom_mod_p(9, 3, 3), 0); // 84 = 0 mod 3
        assert_eq!(binom_mod_p(4, 1, 3), 1); // 4 = 1 mod 3
        assert_eq!(binom_mod_p(4, 2, 3), 0); // 6 = 0 mod 3
        assert_eq!(binom_mod_p(9, 1, 3), 0); // 9 = 0 mod 3
        assert_eq!(binom_mod_p(8, 2, 2), 0); // 28
    }
}
