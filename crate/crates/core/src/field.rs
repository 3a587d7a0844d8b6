//! Exact arithmetic in GF(p^m) for p in {2, 3}.
//!
//! Elements are stored as their canonical encoding: the polynomial-basis
//! coordinates read as a little-endian base-p integer, so `enc(c) = Σ c_i p^i`.
//! Multiplication goes through exponent/logarithm tables built from a
//! generator, addition through digit-wise arithmetic (XOR in characteristic
//! two, a precomputed table in characteristic three).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("unsupported field: p={p}, m={m} (need p in {{2,3}}, p^m <= 4096)")]
    Unsupported { p: u32, m: u32 },
    #[error("polynomial has degree {got}, expected {expected}")]
    WrongDegree { expected: usize, got: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("coefficient {0} is out of range for the prime field")]
    BadCoefficient(u32),
    #[error("not irreducible")]
    NotIrreducible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    MixedFields,
    #[error("encoding {0} is not an element of the field")]
    BadEncoding(u32),
}

/// A field element in canonical encoding. Only meaningful together with the
/// [`GaloisField`] that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn enc(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Irreducible polynomial used for GF(64) unless overridden: X^6 + X^4 + X^3 + X + 1.
pub const GF64_DEFAULT_POLY: [u8; 7] = [1, 1, 0, 1, 1, 0, 1];

/// X^6 - X^4 + X^2 - X - 1 over GF(3); its root ω fixes the constants of the
/// order-121 function at the designated point over GF(729).
pub const GF729_POLY: [u8; 7] = [2, 2, 1, 0, 2, 0, 1];

/// Immutable description of GF(p^m) with its arithmetic tables.
#[derive(Clone)]
pub struct GaloisField {
    p: u8,
    m: u8,
    irr: Vec<u8>,
    size: u16,
    generator: Elem,
    exp: Vec<u16>,
    log: Vec<u16>,
    add_table: Option<Vec<u16>>,
    neg_table: Vec<u16>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("irr", &self.irr)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.irr == other.irr
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    /// Builds GF(p^m) from a monic irreducible `irr` given as little-endian
    /// coefficients (`irr[m] == 1`).
    pub fn new(p: u32, m: u32, irr: &[u32]) -> Result<Self, FieldError> {
        if !(p == 2 || p == 3) || m == 0 || p.checked_pow(m).is_none_or(|s| s > 4096) {
            return Err(FieldError::Unsupported { p, m });
        }
        let m_us = m as usize;
        let trimmed_len = irr.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
        if trimmed_len != m_us + 1 {
            return Err(FieldError::WrongDegree { expected: m_us, got: trimmed_len.saturating_sub(1) });
        }
        if let Some(&bad) = irr.iter().find(|&&c| c >= p) {
            return Err(FieldError::BadCoefficient(bad));
        }
        if irr[m_us] != 1 {
            return Err(FieldError::NotMonic);
        }
        let p8 = p as u8;
        let irr: Vec<u8> = irr[..=m_us].iter().map(|&c| c as u8).collect();
        if !fp_poly::is_irreducible(&irr, p8) {
            return Err(FieldError::NotIrreducible);
        }

        let size = p.pow(m) as u16;
        let slow = SlowArith { p: p8, m: m as u8, irr: &irr };
        let group_order = u64::from(size) - 1;
        let factors = prime_factors(group_order);
        let generator = (1..size)
            .find(|&g| factors.iter().all(|&r| slow.pow(g, group_order / r) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let n = usize::from(size) - 1;
        let mut exp = vec![0u16; 2 * n.max(1)];
        let mut log = vec![0u16; usize::from(size)];
        let mut acc = 1u16;
        for (i, slot) in exp.iter_mut().take(n).enumerate() {
            *slot = acc;
            log[usize::from(acc)] = i as u16;
            acc = slow.mul(acc, generator);
        }
        for i in n..exp.len() {
            exp[i] = exp[i - n];
        }

        let neg_table: Vec<u16> = (0..size).map(|a| slow.neg(a)).collect();
        let add_table = (p8 == 3).then(|| {
            let s = usize::from(size);
            let mut t = vec![0u16; s * s];
            for a in 0..size {
                for b in 0..size {
                    t[usize::from(a) * s + usize::from(b)] = slow.add(a, b);
                }
            }
            t
        });

        Ok(Self { p: p8, m: m as u8, irr, size, generator: Elem(generator), exp, log, add_table, neg_table })
    }

    /// GF(64) with the default polynomial.
    pub fn gf64() -> Self {
        Self::new(2, 6, &GF64_DEFAULT_POLY.map(u32::from)).expect("default GF(64) polynomial")
    }

    /// GF(729) with the polynomial X^6 - X^4 + X^2 - X - 1.
    pub fn gf729() -> Self {
        Self::new(3, 6, &GF729_POLY.map(u32::from)).expect("GF(729) polynomial")
    }

    pub fn characteristic(&self) -> u32 {
        u32::from(self.p)
    }

    pub fn degree(&self) -> u32 {
        u32::from(self.m)
    }

    /// Little-endian coefficients of the defining polynomial.
    pub fn modulus(&self) -> &[u8] {
        &self.irr
    }

    pub fn size(&self) -> usize {
        usize::from(self.size)
    }

    /// The smallest-encoding element of multiplicative order p^m - 1.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// The polynomial-basis root X itself (ω for GF(729)). Equals `Elem(1)`
    /// in the degenerate case m = 1.
    pub fn root(&self) -> Elem {
        if self.m == 1 {
            // X ≡ -irr[0] when the modulus is linear.
            Elem(self.neg_table[usize::from(self.irr[0])])
        } else {
            Elem(u16::from(self.p))
        }
    }

    pub fn from_enc(&self, enc: u32) -> Result<Elem, FieldError> {
        if enc < u32::from(self.size) {
            Ok(Elem(enc as u16))
        } else {
            Err(FieldError::BadEncoding(enc))
        }
    }

    /// Element of the prime field, reduced mod p.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(i64::from(self.p)) as u16)
    }

    pub fn coords(&self, a: Elem) -> Vec<u8> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let c = (v % u16::from(self.p)) as u8;
                v /= u16::from(self.p);
                c
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u8]) -> Result<Elem, FieldError> {
        if coords.len() != usize::from(self.m) {
            return Err(FieldError::WrongDegree { expected: usize::from(self.m), got: coords.len() });
        }
        let mut enc = 0u32;
        for &c in coords.iter().rev() {
            if c >= self.p {
                return Err(FieldError::BadCoefficient(u32::from(c)));
            }
            enc = enc * u32::from(self.p) + u32::from(c);
        }
        self.from_enc(enc)
    }

    /// All elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            None => Elem(a.0 ^ b.0),
            Some(t) => Elem(t[usize::from(a.0) * usize::from(self.size) + usize::from(b.0)]),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg_table[usize::from(a.0)])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let i = usize::from(self.log[usize::from(a.0)]) + usize::from(self.log[usize::from(b.0)]);
        Elem(self.exp[i])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = usize::from(self.size) - 1;
        let l = usize::from(self.log[usize::from(a.0)]);
        Ok(Elem(self.exp[(n - l) % n]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for a non-negative exponent; `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let n = u64::from(self.size) - 1;
        let l = u64::from(self.log[usize::from(a.0)]);
        Elem(self.exp[((l * (e % n)) % n) as usize])
    }

    /// `a^e` for any integer exponent; negative powers of zero are an error.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Result<Elem, FieldError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// `generator^k`, for any integer k.
    pub fn gen_pow(&self, k: i64) -> Elem {
        let n = i64::from(self.size) - 1;
        Elem(self.exp[k.rem_euclid(n) as usize])
    }

    /// Discrete logarithm to the base of [`Self::generator`].
    pub fn log_gen(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| u32::from(self.log[usize::from(a.0)]))
    }

    /// `a^(p^r)`.
    pub fn frobenius(&self, a: Elem, r: u32) -> Elem {
        if self.m == 1 || a.is_zero() {
            return a;
        }
        let n = u64::from(self.size) - 1;
        let mut e = 1u64;
        for _ in 0..(r % u32::from(self.m)) {
            e = (e * u64::from(self.p)) % n;
        }
        self.pow(a, e)
    }

    /// Wraps an element for operator-style arithmetic.
    pub fn elem(&self, a: Elem) -> FieldElement<'_> {
        FieldElement { field: self, elem: a }
    }

    /// Renders an element as `0`, a prime-field integer, or `w<k>` (a power of the generator).
    pub fn display(&self, a: Elem) -> String {
        if u32::from(a.0) < u32::from(self.p) {
            a.0.to_string()
        } else {
            format!("w{}", self.log[usize::from(a.0)])
        }
    }
}

/// An element bound to its field, so that `+`, `*`, `-` read naturally.
/// Operators panic on mixed fields; the `checked_*` methods report it.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f GaloisField,
    elem: Elem,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self.field.display(self.elem))
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.elem == other.elem && self.same_field(other)
    }
}

impl<'f> FieldElement<'f> {
    pub fn value(self) -> Elem {
        self.elem
    }

    pub fn field(self) -> &'f GaloisField {
        self.field
    }

    fn same_field(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) || self.field == other.field
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self, FieldError> {
        self.check(&other)?;
        Ok(self.field.elem(self.field.add(self.elem, other.elem)))
    }

    pub fn checked_mul(self, other: Self) -> Result<Self, FieldError> {
        self.check(&other)?;
        Ok(self.field.elem(self.field.mul(self.elem, other.elem)))
    }

    pub fn inv(self) -> Result<Self, FieldError> {
        Ok(self.field.elem(self.field.inv(self.elem)?))
    }

    pub fn pow(self, e: i64) -> Result<Self, FieldError> {
        Ok(self.field.elem(self.field.pow_signed(self.elem, e)?))
    }

    pub fn frobenius(self, r: u32) -> Self {
        self.field.elem(self.field.frobenius(self.elem, r))
    }
}

impl<'f> Add for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn add(self, rhs: Self) -> Self::Output {
        self.checked_add(rhs).expect("mixed fields")
    }
}

impl<'f> Sub for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.checked_add(-rhs).expect("mixed fields")
    }
}

impl<'f> Mul for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.checked_mul(rhs).expect("mixed fields")
    }
}

impl<'f> Neg for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn neg(self) -> Self::Output {
        self.field.elem(self.field.neg(self.elem))
    }
}

/// Table-free arithmetic on encodings, used only while building the tables.
struct SlowArith<'a> {
    p: u8,
    m: u8,
    irr: &'a [u8],
}

impl SlowArith<'_> {
    fn digits(&self, mut v: u16) -> Vec<u8> {
        (0..self.m)
            .map(|_| {
                let d = (v % u16::from(self.p)) as u8;
                v /= u16::from(self.p);
                d
            })
            .collect()
    }

    fn undigits(&self, d: &[u8]) -> u16 {
        d.iter().rev().fold(0u16, |acc, &c| acc * u16::from(self.p) + u16::from(c))
    }

    fn add(&self, a: u16, b: u16) -> u16 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u8> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    fn neg(&self, a: u16) -> u16 {
        let s: Vec<u8> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.undigits(&s)
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        let prod = fp_poly::mul(&self.digits(a), &self.digits(b), self.p);
        let mut r = fp_poly::rem(&prod, self.irr, self.p);
        r.resize(usize::from(self.m), 0);
        self.undigits(&r)
    }

    fn pow(&self, a: u16, mut e: u64) -> u16 {
        let (mut base, mut acc) = (a, 1u16);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over GF(p), little-endian, used for irreducibility testing.
pub(crate) mod fp_poly {
    pub fn trim(mut a: Vec<u8>) -> Vec<u8> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u8], b: &[u8], p: u8) -> Vec<u8> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u16; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + u16::from(x) * u16::from(y)) % u16::from(p);
            }
        }
        trim(out.into_iter().map(|v| v as u8).collect())
    }

    fn inv_mod_p(a: u8, p: u8) -> u8 {
        (1..p).find(|&b| (u16::from(a) * u16::from(b)) % u16::from(p) == 1).expect("nonzero")
    }

    pub fn rem(a: &[u8], m: &[u8], p: u8) -> Vec<u8> {
        let m = trim(m.to_vec());
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod_p(m[dm], p);
        while r.len() > dm {
            let dr = r.len() - 1;
            let c = (u16::from(r[dr]) * u16::from(lead_inv)) % u16::from(p);
            for (i, &mi) in m.iter().enumerate() {
                let idx = dr - dm + i;
                let sub = (c * u16::from(mi)) % u16::from(p);
                r[idx] = ((u16::from(r[idx]) + u16::from(p) - sub) % u16::from(p)) as u8;
            }
            r = trim(r);
        }
        r
    }

    pub fn sub(a: &[u8], b: &[u8], p: u8) -> Vec<u8> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn gcd(a: &[u8], b: &[u8], p: u8) -> Vec<u8> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `X^(p^k) mod f`.
    fn x_pow_p_pow(f: &[u8], p: u8, k: u32) -> Vec<u8> {
        let mut x = rem(&[0, 1], f, p);
        for _ in 0..k {
            // raise to the p-th power
            let mut acc = vec![1u8];
            for _ in 0..p {
                acc = rem(&mul(&acc, &x, p), f, p);
            }
            x = acc;
        }
        x
    }

    /// Rabin's test: f of degree m is irreducible iff X^(p^m) ≡ X (mod f) and
    /// gcd(X^(p^(m/r)) - X, f) = 1 for every prime r dividing m.
    pub fn is_irreducible(f: &[u8], p: u8) -> bool {
        let f = trim(f.to_vec());
        if f.len() < 2 {
            return false;
        }
        let m = (f.len() - 1) as u32;
        if m == 1 {
            return true;
        }
        let x = vec![0u8, 1];
        if sub(&x_pow_p_pow(&f, p, m), &x, p) != Vec::<u8>::new() {
            return false;
        }
        let primes = super::prime_factors(u64::from(m));
        primes.iter().all(|&r| {
            let h = sub(&x_pow_p_pow(&f, p, m / r as u32), &x, p);
            gcd(&f, &h, p).len() == 1
        })
    }
}
