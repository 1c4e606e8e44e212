//! Static exact data about compact simply-connected simple Lie groups:
//! centers with named generators, named central quotients, and tabulated
//! low-dimensional homotopy groups.
//!
//! The homotopy tables are shipped as an embedded text resource with one
//! record per `(family, n, i)` triple, restricted to the Bott stable range
//! plus `pi_{2n}(SU(n)) = Z/n!`. Degrees outside the table come back as
//! `Unknown` rather than extrapolated values.

use crate::abelian::{AbGroupDescriptor, Elt, FinAbGroup};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("SU(n) requires n >= 2, got n = {0}")]
    BadSu(u32),
    #[error("Sp(n) requires n >= 1, got n = {0}")]
    BadSp(u32),
    #[error(
        "Spin({0}) is not accepted; for n < 7 use the isomorphic presentation instead: \
         Spin(3) = SU(2), Spin(4) = SU(2) x SU(2), Spin(5) = Sp(2), Spin(6) = SU(4)"
    )]
    SmallSpin(u32),
    #[error("degree out of range: {0}")]
    BadDegree(String),
    #[error("malformed table record at line {line}: {text}")]
    BadTableRecord { line: usize, text: String },
}

/// A compact simply-connected simple Lie group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleType {
    SU(u32),
    Sp(u32),
    Spin(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl SimpleType {
    pub fn validate(&self) -> Result<(), CatalogError> {
        match *self {
            SimpleType::SU(n) if n < 2 => Err(CatalogError::BadSu(n)),
            SimpleType::Sp(n) if n < 1 => Err(CatalogError::BadSp(n)),
            SimpleType::Spin(n) if n < 7 => Err(CatalogError::SmallSpin(n)),
            _ => Ok(()),
        }
    }

    /// The center `Z(H)` with its named generators.
    ///
    /// Naming convention for `Spin(4m)`: `z` is the generator whose quotient
    /// is `SO(4m)` and `d-` the one whose quotient is the semi-spinor group
    /// `Ss(4m)`; `d+ = z + d-`. For `Spin(4m+2)` the center is `Z/4 = <d>`
    /// with `z = 2d`.
    pub fn center(&self) -> FinAbGroup {
        let build = || -> Result<FinAbGroup, crate::abelian::AbelianError> {
            match *self {
                SimpleType::SU(n) => FinAbGroup::new(vec![n as u64])?.with_named("c", vec![1]),
                SimpleType::Sp(_) => FinAbGroup::new(vec![2])?.with_named("c", vec![1]),
                SimpleType::Spin(n) if n % 2 == 1 => {
                    FinAbGroup::new(vec![2])?.with_named("z", vec![1])
                }
                SimpleType::Spin(n) if n % 4 == 2 => {
                    FinAbGroup::new(vec![4])?.with_named("d", vec![1])?.with_named("z", vec![2])
                }
                SimpleType::Spin(_) => FinAbGroup::new(vec![2, 2])?
                    .with_named("z", vec![1, 0])?
                    .with_named("d-", vec![0, 1])?
                    .with_named("d+", vec![1, 1]),
                SimpleType::E6 => FinAbGroup::new(vec![3])?.with_named("c", vec![1]),
                SimpleType::E7 => FinAbGroup::new(vec![2])?.with_named("c", vec![1]),
                SimpleType::G2 | SimpleType::F4 | SimpleType::E8 => Ok(FinAbGroup::trivial()),
            }
        };
        build().expect("center construction is total on valid types")
    }

    fn family(&self) -> Family {
        match self {
            SimpleType::SU(_) => Family::SU,
            SimpleType::Sp(_) => Family::Sp,
            SimpleType::Spin(_) => Family::Spin,
            SimpleType::G2 => Family::G2,
            SimpleType::F4 => Family::F4,
            SimpleType::E6 => Family::E6,
            SimpleType::E7 => Family::E7,
            SimpleType::E8 => Family::E8,
        }
    }

    fn rank_param(&self) -> u32 {
        match *self {
            SimpleType::SU(n) | SimpleType::Sp(n) | SimpleType::Spin(n) => n,
            _ => 0,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::SU(n) => write!(f, "SU({n})"),
            SimpleType::Sp(n) => write!(f, "Sp({n})"),
            SimpleType::Spin(n) => write!(f, "Spin({n})"),
            SimpleType::G2 => write!(f, "G2"),
            SimpleType::F4 => write!(f, "F4"),
            SimpleType::E6 => write!(f, "E6"),
            SimpleType::E7 => write!(f, "E7"),
            SimpleType::E8 => write!(f, "E8"),
        }
    }
}

/// Standard name of the quotient of `t` by the central subgroup generated by
/// `gens`, or a structural `H/...` fallback.
pub fn quotient_name(t: SimpleType, gens: &[Elt]) -> String {
    let center = t.center();
    let gens: Vec<Elt> = gens.iter().map(|g| center.reduce(g.clone()).expect("element shape")).collect();
    let sub = center.closure(&gens);
    let order = sub.len() as u64;
    if order == 1 {
        return t.to_string();
    }
    let full = order == center.order();
    match t {
        SimpleType::SU(n) => {
            if full {
                format!("PU({n})")
            } else {
                format!("SU({n})/(Z/{order})")
            }
        }
        SimpleType::Sp(n) => format!("PSp({n})"),
        SimpleType::Spin(n) if n % 2 == 1 => format!("SO({n})"),
        SimpleType::Spin(n) if n % 4 == 2 => {
            if full {
                format!("PO({n})")
            } else {
                format!("SO({n})")
            }
        }
        SimpleType::Spin(n) => {
            if full {
                format!("PO({n})")
            } else if sub.contains(&center.named("z").expect("named z")) {
                format!("SO({n})")
            } else if sub.contains(&center.named("d-").expect("named d-")) {
                format!("Ss({n})")
            } else {
                // the other half-spin quotient, abstractly isomorphic to Ss(n)
                format!("Ss+({n})")
            }
        }
        SimpleType::E6 => "Ad(E6)".to_string(),
        SimpleType::E7 => "Ad(E7)".to_string(),
        SimpleType::G2 | SimpleType::F4 | SimpleType::E8 => t.to_string(),
    }
}

/// Whether the degree-`i` polynomial generator of the mod 2 cohomology of the
/// spin classifying space survives to the loop-space suspension.
///
/// True iff `i != 2^k + 1` for all `k >= 0`; the excluded classes (including
/// `u_2` itself) die against the defining relations of the presentation.
pub fn spin_u_class_suspends(n: u32, i: u32) -> Result<bool, CatalogError> {
    if !(2..=n).contains(&i) {
        return Err(CatalogError::BadDegree(format!("need 2 <= i <= {n}, got i = {i}")));
    }
    Ok(!(i - 1).is_power_of_two())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Family {
    SU,
    Sp,
    Spin,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "SU" => Family::SU,
            "Sp" => Family::Sp,
            "Spin" => Family::Spin,
            "G2" => Family::G2,
            "F4" => Family::F4,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            _ => return None,
        })
    }
}

/// Tabulated homotopy groups, keyed by `(family, n, i)`.
#[derive(Debug, Clone, Default)]
pub struct PiTables {
    records: BTreeMap<(Family, u32, u32), AbGroupDescriptor>,
}

static EMBEDDED: OnceLock<PiTables> = OnceLock::new();

impl PiTables {
    /// The tables compiled into the crate.
    pub fn embedded() -> &'static PiTables {
        EMBEDDED.get_or_init(|| {
            PiTables::parse(include_str!("../resources/pi_tables.txt"))
                .expect("embedded table parses")
        })
    }

    /// Parse records of the form `family n i free_rank torsion`, where
    /// torsion is `-` or a comma-separated ascending chain.
    pub fn parse(text: &str) -> Result<PiTables, CatalogError> {
        let mut records = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || CatalogError::BadTableRecord { line: lineno + 1, text: line.to_string() };
            let mut it = line.split_whitespace();
            let fam = it.next().and_then(Family::parse).ok_or_else(bad)?;
            let n: u32 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let i: u32 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let rank: u32 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let tors = it.next().ok_or_else(bad)?;
            let torsion: Vec<u64> = if tors == "-" {
                Vec::new()
            } else {
                tors.split(',').map(str::parse).collect::<Result<_, _>>().map_err(|_| bad())?
            };
            records.insert((fam, n, i), AbGroupDescriptor::known(rank, &torsion));
        }
        Ok(PiTables { records })
    }

    /// Merge `other` on top of these tables (override file semantics).
    pub fn extend_with(&mut self, other: PiTables) {
        self.records.extend(other.records);
    }

    /// `pi_i` of the simple group `t`; outside the table this is `Unknown`.
    pub fn pi(&self, t: SimpleType, i: u32) -> AbGroupDescriptor {
        if i == 0 {
            return AbGroupDescriptor::zero(); // connected
        }
        self.records
            .get(&(t.family(), t.rank_param(), i))
            .cloned()
            .unwrap_or_else(|| {
                AbGroupDescriptor::unknown(format!("pi_{i}({t}) outside stable table"))
            })
    }
}
