//! Exact homotopy invariants of gauge groups of principal `G`-bundles over
//! compact Riemann surfaces, for compact connected Lie groups `G` with
//! `pi_1(G) = Z`.
//!
//! A group is presented as `G = (S^1 x H)/C` with `H` simply connected and
//! `C` a finite central subgroup. The crate computes the invariant
//! `s(G) = |p2(C)|`, classifies gauge groups by the gcd `(k, s(G))`, resolves
//! homotopy groups of gauge groups over surfaces and spheres (and of moduli
//! spaces of stable bundles through the Daskalopoulos-Uhlenbeck range), and
//! mechanically verifies the supporting mod-p cohomology facts: Wu-formula
//! Steenrod squares, a Steenrod-operation nontriviality criterion, and
//! commutator pullbacks through Hopf algebra coproducts and antipodes.
//!
//! Everything is exact integer arithmetic; values outside the embedded
//! stable-range tables are reported as `Unknown`, never extrapolated.

pub mod abelian;
pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod homotopy;
pub mod presentation;
pub mod verify;

pub use abelian::{AbGroupDescriptor, FinAbGroup};
pub use catalog::{quotient_name, spin_u_class_suspends, PiTables, SimpleType};
pub use classify::{class_count, equivalent, is_iff_family, samelson_order, EquivalenceVerdict};
pub use homotopy::{gauge_components, gauge_pi, moduli_pi, Base, GaugeQuery, PiResult};
pub use presentation::{validate, CentralElement, Diagnostic, GroupPresentation, Validated};
