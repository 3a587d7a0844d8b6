//! The GK curve over GF(q^2), q = q̄^3:
//!
//! ```text
//! Z^(q̄²-q̄+1) = Y·h(X),   X^q̄ + X = Y^(q̄+1),   h(X) = Σ_{i=0}^{q̄} (-1)^(i+1) X^(i(q̄-1))
//! ```
//!
//! plus the single point at infinity X∞ = (0:1:0:0).

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Elem, FieldError, GaloisField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("q̄ = {0} is not a supported prime power")]
    BadQbar(u32),
    #[error("field GF({p}^{m}) does not match q̄ = {qbar} (need GF(q̄^6))")]
    FieldMismatch { qbar: u32, p: u32, m: u32 },
    #[error("no default field for q̄ = {0}; supply one explicitly")]
    NoDefaultField(u32),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orbit {
    O1,
    O2,
}

impl std::fmt::Display for Orbit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Orbit::O1 => "O1",
            Orbit::O2 => "O2",
        })
    }
}

impl std::str::FromStr for Orbit {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "O1" | "o1" | "1" => Ok(Orbit::O1),
            "O2" | "o2" | "2" => Ok(Orbit::O2),
            other => Err(format!("unknown orbit `{other}` (expected O1 or O2)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    Infinite,
    Affine { x: Elem, y: Elem, z: Elem },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurvePoint {
    pub kind: PointKind,
    pub orbit: Orbit,
}

impl CurvePoint {
    pub const INFINITE: CurvePoint = CurvePoint { kind: PointKind::Infinite, orbit: Orbit::O1 };

    pub fn affine(x: Elem, y: Elem, z: Elem) -> Self {
        let orbit = if z.is_zero() { Orbit::O1 } else { Orbit::O2 };
        CurvePoint { kind: PointKind::Affine { x, y, z }, orbit }
    }

    pub fn coords(&self) -> Option<(Elem, Elem, Elem)> {
        match self.kind {
            PointKind::Infinite => None,
            PointKind::Affine { x, y, z } => Some((x, y, z)),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self.kind, PointKind::Infinite)
    }
}

fn prime_power_base(n: u32) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut e = 0;
    let mut v = n;
    while v.is_multiple_of(p) {
        v /= p;
        e += 1;
    }
    (v == 1).then_some((p, e))
}

/// Integer coefficients of h(X), little-endian, degree q̄(q̄-1).
pub fn h_poly(qbar: u32) -> Vec<i64> {
    let step = (qbar - 1) as usize;
    let mut coeffs = vec![0i64; qbar as usize * step + 1];
    for i in 0..=qbar as usize {
        coeffs[i * step] += if i % 2 == 0 { -1 } else { 1 };
    }
    coeffs
}

/// h(X) reduced into the prime field GF(p).
pub fn h_poly_mod(qbar: u32, p: u32) -> Vec<u32> {
    h_poly(qbar).into_iter().map(|c| c.rem_euclid(i64::from(p)) as u32).collect()
}

/// q̄ together with the field GF(q^2) and the derived invariants.
#[derive(Debug, Clone)]
pub struct CurveParams {
    pub qbar: u32,
    pub q: u32,
    pub field: GaloisField,
    pub genus: u64,
    pub expected_points: u64,
}

impl CurveParams {
    pub fn new(qbar: u32, field: GaloisField) -> Result<Self, CurveError> {
        let (p, e) = prime_power_base(qbar).ok_or(CurveError::BadQbar(qbar))?;
        if field.characteristic() != p || field.degree() != 6 * e {
            return Err(CurveError::FieldMismatch { qbar, p: field.characteristic(), m: field.degree() });
        }
        let q = qbar.pow(3);
        let (qb, qq) = (u64::from(qbar), u64::from(q));
        let genus = (qb.pow(3) + 1) * (qb * qb - 2) / 2 + 1;
        let expected_points = qq * qq + 1 + 2 * genus * qq;
        Ok(Self { qbar, q, field, genus, expected_points })
    }

    /// GF(64) (default polynomial) for q̄ = 2, GF(729) for q̄ = 3.
    pub fn standard(qbar: u32) -> Result<Self, CurveError> {
        let field = match qbar {
            2 => GaloisField::gf64(),
            3 => GaloisField::gf729(),
            other => return Err(CurveError::NoDefaultField(other)),
        };
        Self::new(qbar, field)
    }

    pub fn h_eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        let coeffs = h_poly(self.qbar);
        coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), f.from_int(c)))
    }

    /// Both affine equations.
    pub fn on_curve(&self, x: Elem, y: Elem, z: Elem) -> bool {
        let f = &self.field;
        let qb = u64::from(self.qbar);
        let first = f.pow(z, qb * qb - qb + 1) == f.mul(y, self.h_eval(x));
        let second = f.add(f.pow(x, qb), x) == f.pow(y, qb + 1);
        first && second
    }

    /// X^q + X = Y^(q+1) + Z^(q+1) with q = q̄^3.
    pub fn on_hermitian_surface(&self, x: Elem, y: Elem, z: Elem) -> bool {
        let f = &self.field;
        let q = u64::from(self.q);
        f.add(f.pow(x, q), x) == f.add(f.pow(y, q + 1), f.pow(z, q + 1))
    }

    pub fn point(&self, x: Elem, y: Elem, z: Elem) -> Result<CurvePoint, CurveError> {
        if self.on_curve(x, y, z) {
            Ok(CurvePoint::affine(x, y, z))
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    /// Point given by exponents of the field generator; an exponent of `None` means 0.
    pub fn point_from_exponents(&self, exps: [Option<i64>; 3]) -> Result<CurvePoint, CurveError> {
        let f = &self.field;
        let e = |k: Option<i64>| k.map_or(Elem::ZERO, |k| f.gen_pow(k));
        self.point(e(exps[0]), e(exps[1]), e(exps[2]))
    }
}

/// All GF(q^2)-rational points: X∞ first, then affine points sorted by
/// (enc x, enc y, enc z).
pub fn enumerate_points(params: &CurveParams) -> Vec<CurvePoint> {
    let f = &params.field;
    let qb = u64::from(params.qbar);

    // Fibres of the additive map x ↦ x^q̄ + x.
    let mut fibres: HashMap<Elem, Vec<Elem>> = HashMap::new();
    for x in f.elements() {
        fibres.entry(f.add(f.pow(x, qb), x)).or_default().push(x);
    }
    // Roots of z^(q̄²-q̄+1) = w, indexed by w.
    let mut roots: HashMap<Elem, Vec<Elem>> = HashMap::new();
    for z in f.elements() {
        roots.entry(f.pow(z, qb * qb - qb + 1)).or_default().push(z);
    }
    let h_table: Vec<Elem> = f.elements().map(|x| params.h_eval(x)).collect();

    let mut affine = Vec::new();
    for y in f.elements() {
        let Some(xs) = fibres.get(&f.pow(y, qb + 1)) else { continue };
        for &x in xs {
            let w = f.mul(y, h_table[usize::from(x.enc())]);
            if let Some(zs) = roots.get(&w) {
                affine.extend(zs.iter().map(|&z| (x, y, z)));
            }
        }
    }
    affine.sort_unstable();

    std::iter::once(CurvePoint::INFINITE)
        .chain(affine.into_iter().map(|(x, y, z)| CurvePoint::affine(x, y, z)))
        .collect()
}

pub fn orbit_census(points: &[CurvePoint]) -> (usize, usize) {
    let o1 = points.iter().filter(|p| p.orbit == Orbit::O1).count();
    (o1, points.len() - o1)
}

pub fn orbit_size(qbar: u64, orbit: Orbit) -> u64 {
    let q3 = qbar.pow(3);
    match orbit {
        Orbit::O1 => q3 + 1,
        Orbit::O2 => q3 * (q3 + 1) * (qbar * qbar - 1),
    }
}

/// Order of the stabilizer in Aut(X) of a point in the given orbit (metadata only).
pub fn stabilizer_order(qbar: u64, orbit: Orbit) -> u64 {
    let q2 = qbar * qbar;
    match orbit {
        Orbit::O1 => qbar.pow(3) * (q2 - 1) * (q2 - qbar + 1),
        Orbit::O2 => q2 - qbar + 1,
    }
}

pub fn automorphism_group_order(qbar: u64) -> u64 {
    let q3 = qbar.pow(3);
    let q2 = qbar * qbar;
    q3 * (q3 + 1) * (q2 - 1) * (q2 - qbar + 1)
}

/// A GK curve together with its canonically ordered rational points.
#[derive(Debug, Clone)]
pub struct GkCurve {
    pub params: CurveParams,
    pub points: Vec<CurvePoint>,
}

impl GkCurve {
    pub fn new(params: CurveParams) -> Self {
        let points = enumerate_points(&params);
        Self { params, points }
    }

    pub fn standard(qbar: u32) -> Result<Self, CurveError> {
        Ok(Self::new(CurveParams::standard(qbar)?))
    }

    pub fn field(&self) -> &GaloisField {
        &self.params.field
    }

    pub fn qbar(&self) -> u32 {
        self.params.qbar
    }

    pub fn first_in_orbit(&self, orbit: Orbit) -> Option<CurvePoint> {
        self.points.iter().copied().find(|p| p.orbit == orbit)
    }
}
