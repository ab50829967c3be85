//! Exact arithmetic in GF(q) for q = p^m.
//!
//! Elements are encoded as integer indices in `[0, q)`: the base-p digits of
//! the index are the coefficients of the representing polynomial, least
//! significant digit first. Index 0 is the zero element, index 1 the one
//! element. For extension fields the reducing modulus is chosen
//! deterministically (see [`FieldSpec::make`]), so the encoding is portable
//! across runs and machines.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default ceiling on the field order.
pub const DEFAULT_FIELD_CEILING: u64 = 1 << 20;

/// Lookup tables are built when the order is at most this value.
const TABLE_LIMIT: u64 = 256;

/// An element of a finite field, stored as its canonical integer index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>, // inv[0] unused
}

/// A finite field GF(p^m) with a fixed canonical representation.
#[derive(Clone)]
pub struct FieldSpec {
    p: u64,
    m: u32,
    q: u64,
    /// Coefficients of the monic reducing polynomial, constant term first,
    /// length m+1. Empty for prime fields, where no reduction is needed.
    modulus: Vec<u64>,
    tables: Option<Arc<Tables>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for FieldSpec {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power into (p, m); errors if `q` is not a prime power.
pub fn factor_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut m = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                m += 1;
            }
            return if rest == 1 {
                Ok((p, m))
            } else {
                Err(Error::NotPrimePower(q))
            };
        }
        p += 1;
    }
    Ok((q, 1)) // q itself is prime
}

impl FieldSpec {
    /// Builds GF(p^m) with the default order ceiling.
    ///
    /// For m > 1 the reducing modulus is the canonical one: among all monic
    /// irreducible polynomials of degree m over GF(p), the one whose
    /// non-leading coefficient vector (c_{m-1},...,c_0), read as a base-p
    /// integer with c_{m-1} most significant, is smallest.
    pub fn make(p: u64, m: u32) -> Result<FieldSpec> {
        Self::make_with_ceiling(p, m, DEFAULT_FIELD_CEILING)
    }

    pub fn make_with_ceiling(p: u64, m: u32, ceiling: u64) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::BadDegree);
        }
        let q = p
            .checked_pow(m)
            .ok_or(Error::FieldTooLarge { q: u64::MAX, ceiling })?;
        if q > ceiling {
            return Err(Error::FieldTooLarge { q, ceiling });
        }
        let modulus = if m == 1 {
            Vec::new()
        } else {
            canonical_modulus(p, m)
        };
        let mut field = FieldSpec { p, m, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(Arc::new(field.build_tables()));
        }
        Ok(field)
    }

    /// Builds the field of order `q`, factoring it as a prime power.
    pub fn of_order(q: u64) -> Result<FieldSpec> {
        let (p, m) = factor_prime_power(q)?;
        Self::make(p, m)
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The reducing modulus, constant term first; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.m == 1 {
            None
        } else {
            Some(&self.modulus)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    fn digits(&self, a: u32) -> Vec<u64> {
        let mut out = vec![0u64; self.m as usize];
        let mut v = a as u64;
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn from_digits(&self, digits: &[u64]) -> u32 {
        let mut v = 0u64;
        for &d in digits.iter().rev() {
            v = v * self.p + d;
        }
        v as u32
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return ((a as u64 + b as u64) % self.p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    fn neg_raw(&self, a: u32) -> u32 {
        if self.m == 1 {
            return ((self.p - a as u64) % self.p) as u32;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.from_digits(&neg)
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce top-down: x^m = -(c_{m-1} x^{m-1} + ... + c_0).
        for deg in (m..prod.len()).rev() {
            let coef = prod[deg];
            if coef == 0 {
                continue;
            }
            prod[deg] = 0;
            for j in 0..m {
                let sub = coef * self.modulus[j] % self.p;
                prod[deg - m + j] = (prod[deg - m + j] + self.p - sub) % self.p;
            }
        }
        prod.truncate(m);
        self.from_digits(&prod)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        let mut neg = vec![0u32; q];
        let mut inv = vec![0u32; q];
        for a in 0..q as u32 {
            neg[a as usize] = self.neg_raw(a);
            for b in 0..q as u32 {
                add[a as usize * q + b as usize] = self.add_raw(a, b);
                let prod = self.mul_raw(a, b);
                mul[a as usize * q + b as usize] = prod;
                if prod == 1 {
                    inv[a as usize] = b;
                }
            }
        }
        Tables { add, mul, neg, inv }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!((a.0 as u64) < self.q && (b.0 as u64) < self.q);
        match &self.tables {
            Some(t) => FieldElement(t.add[a.0 as usize * self.q as usize + b.0 as usize]),
            None => FieldElement(self.add_raw(a.0, b.0)),
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!((a.0 as u64) < self.q && (b.0 as u64) < self.q);
        match &self.tables {
            Some(t) => FieldElement(t.mul[a.0 as usize * self.q as usize + b.0 as usize]),
            None => FieldElement(self.mul_raw(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.neg[a.0 as usize]),
            None => FieldElement(self.neg_raw(a.0)),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        match &self.tables {
            Some(t) => Ok(FieldElement(t.inv[a.0 as usize])),
            // a^(q-2) = a^(-1) in the multiplicative group
            None => Ok(self.pow(a, self.q - 2)),
        }
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut x = a;
        let mut ord = 1;
        while x != FieldElement::ONE {
            x = self.mul(x, a);
            ord += 1;
        }
        Ok(ord)
    }

    /// The element of smallest index with multiplicative order q-1.
    /// For q = 2 the unit group is trivial and 1 is returned.
    pub fn primitive_element(&self) -> FieldElement {
        if self.q == 2 {
            return FieldElement::ONE;
        }
        for idx in 1..self.q as u32 {
            let a = FieldElement(idx);
            if self.order(a).expect("nonzero") == self.q - 1 {
                return a;
            }
        }
        unreachable!("the unit group of a finite field is cyclic")
    }
}

// ---- polynomial helpers over GF(p), used only for modulus selection ----

fn poly_trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

/// Remainder of a mod b over GF(p); b must be nonzero with invertible lead.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while rem.len() > db && !(rem.len() == 1 && rem[0] == 0) {
        let dr = rem.len() - 1;
        let coef = rem[dr] * lead_inv % p;
        if coef != 0 {
            for j in 0..=db {
                let sub = coef * b[j] % p;
                let idx = dr - db + j;
                rem[idx] = (rem[idx] + p - sub) % p;
            }
        }
        rem.pop();
        poly_trim(&mut rem);
        if rem.iter().all(|&c| c == 0) {
            return vec![0];
        }
    }
    poly_trim(&mut rem);
    rem
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) works
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn poly_is_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

/// Irreducibility by trial division: a degree-m polynomial is reducible iff
/// it has a monic divisor of degree between 1 and m/2.
pub fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    for d in 1..=(m / 2) {
        let count = p.pow(d as u32);
        for t in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut v = t;
            for coef in g.iter_mut().take(d) {
                *coef = v % p;
                v /= p;
            }
            g[d] = 1;
            if poly_is_zero(&poly_rem(f, &g, p)) {
                return false;
            }
        }
    }
    true
}

/// Scans monic degree-m polynomials in canonical order and returns the first
/// irreducible one, constant term first.
fn canonical_modulus(p: u64, m: u32) -> Vec<u64> {
    let m = m as usize;
    let count = p.pow(m as u32);
    for t in 0..count {
        // t encodes (c_{m-1},...,c_0) with c_{m-1} most significant
        let mut f = vec![0u64; m + 1];
        let mut v = t;
        for coef in f.iter_mut().take(m) {
            *coef = v % p;
            v /= p;
        }
        f[m] = 1;
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist for every degree")
}
