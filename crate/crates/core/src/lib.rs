//! One-point and improved algebraic-geometric codes on the GK maximal curves
//! over GF(64) and GF(729).
//!
//! The pipeline runs bottom-up:
//!
//! - [`field`]: exact GF(p^m) arithmetic.
//! - [`curve`]: the GK curve, its rational points and their orbits.
//! - [`semigroup`]: Weierstrass semigroups, `ν_ℓ`, the order bound and `r_d`.
//! - [`funcfield`]: rational functions with prescribed pole orders at a base point.
//! - [`intersect`]: intersection multiplicities of plane curves, used to certify non-gaps.
//! - [`codes`]: parity-check matrices, ranks, distance oracles and propagation rules.

pub mod codes;
pub mod curve;
pub mod field;
pub mod funcfield;
pub mod intersect;
pub mod reference;
pub mod selftest;
pub mod semigroup;

pub use codes::{CodeFamily, CodeKind, CodeSpec, EvalMatrix};
pub use curve::{CurveParams, CurvePoint, GkCurve, Orbit};
pub use field::{Elem, FieldElement, GaloisField};
pub use semigroup::NumericalSemigroup;
