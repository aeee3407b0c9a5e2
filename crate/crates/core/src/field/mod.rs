//! Finite fields F_{p^m} for odd p.
//!
//! Elements are stored by their canonical encoding `Σ cᵢ·pⁱ` where `cᵢ` are
//! the coordinates in the basis `1, x, …, x^{m-1}` of `F_p[x]/(modulus)`.
//! The same integer is used everywhere elements cross an API or I/O boundary.

mod generator;
pub(crate) mod poly;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use generator::{factorize, GeneratorData, TABLE_THRESHOLD};

/// Default upper bound on `q = p^m`.
pub const DEFAULT_BOUND: u64 = 1 << 20;

/// An element of some `F_q`, held as its canonical encoding in `[0, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(u64);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub(crate) const fn raw(value: u64) -> Element {
        Element(value)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// `F_{p^m}` presented as `F_p[x]/(modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    m: u32,
    q: u64,
    /// Monic, constant term first, length `m + 1`.
    modulus: Vec<u64>,
}

pub fn is_odd_prime(n: u64) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn checked_size(p: u64, m: u32, bound: u64) -> Result<u64> {
    if !is_odd_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    match p.checked_pow(m) {
        Some(q) if q <= bound => Ok(q),
        _ => Err(Error::FieldTooLarge { p, m, bound }),
    }
}

impl Field {
    /// Builds `F_{p^m}` with the irreducible monic modulus of smallest
    /// canonical encoding.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_bound(p, m, DEFAULT_BOUND)
    }

    pub fn with_bound(p: u64, m: u32, bound: u64) -> Result<Self> {
        let q = checked_size(p, m, bound)?;
        if m == 1 {
            return Ok(Field {
                p,
                m,
                q,
                modulus: vec![0, 1],
            });
        }
        // Lower coefficients enumerated in order of Σ cᵢ pⁱ.
        for code in 0..q {
            let mut modulus = digits(code, p, m);
            modulus.push(1);
            if poly::is_irreducible(&modulus, p) {
                return Ok(Field { p, m, q, modulus });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over F_p")
    }

    /// Builds the field from an explicit monic modulus (constant term first).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        Self::with_modulus_bound(p, modulus, DEFAULT_BOUND)
    }

    pub fn with_modulus_bound(p: u64, modulus: Vec<u64>, bound: u64) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        let m = (modulus.len() - 1) as u32;
        let q = checked_size(p, m, bound)?;
        if *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus { expected: m });
        }
        if m == 1 {
            // Any monic linear modulus gives the same residue ring.
            return Ok(Field {
                p,
                m,
                q,
                modulus: vec![0, 1],
            });
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::ModulusNotIrreducible);
        }
        Ok(Field { p, m, q, modulus })
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

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Validates a canonical encoding.
    pub fn element(&self, value: u64) -> Result<Element> {
        if value < self.q {
            Ok(Element(value))
        } else {
            Err(Error::FieldMismatch {
                value,
                q: self.q,
            })
        }
    }

    /// The image of the integer `c` in the prime subfield.
    pub fn from_int(&self, c: i64) -> Element {
        Element(c.rem_euclid(self.p as i64) as u64)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Element> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch {
                value: u64::MAX,
                q: self.q,
            });
        }
        Ok(Element(encode(coeffs, self.p)))
    }

    pub fn coeffs(&self, x: Element) -> Vec<u64> {
        digits(x.0, self.p, self.m)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.q).map(Element)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> {
        (1..self.q).map(Element)
    }

    /// The basis element `x`, a root of the modulus. `None` for prime fields.
    pub fn adjoined_root(&self) -> Option<Element> {
        (self.m > 1).then_some(Element(self.p))
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        if self.m == 1 {
            let s = a.0 + b.0;
            return Element(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u64, 1u64);
        while x > 0 || y > 0 {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        Element(out)
    }

    pub fn neg(&self, a: Element) -> Element {
        if self.m == 1 {
            return Element(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let (mut x, mut out, mut place) = (a.0, 0u64, 1u64);
        while x > 0 {
            let d = x % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            x /= self.p;
        }
        Element(out)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        if self.m == 1 {
            return Element(poly::mul_mod(a.0, b.0, self.p));
        }
        if a.0 == 0 || b.0 == 0 {
            return Element::ZERO;
        }
        let prod = poly::mul(&self.coeffs(a), &self.coeffs(b), self.p);
        let r = poly::rem(&prod, &self.modulus, self.p);
        Element(encode(&r, self.p))
    }

    /// Multiplication by an integer, i.e. by its image in the prime subfield.
    pub fn scale(&self, c: i64, a: Element) -> Element {
        self.mul(self.from_int(c), a)
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Element, mut e: u64) -> Element {
        let mut acc = Element::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Element) -> Result<Element> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Checked arithmetic on raw encodings.
    pub fn arith(&self, a: Element, b: Element, op: ArithOp) -> Result<Element> {
        for x in [a, b] {
            self.element(x.0)?;
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    pub fn frobenius(&self, a: Element) -> Element {
        self.pow(a, self.p)
    }

    /// Returns `c` when `x = c·1` for a residue `c`.
    pub fn prime_subfield_residue(&self, x: Element) -> Result<u64> {
        if x.0 < self.p {
            Ok(x.0)
        } else {
            Err(Error::NotInPrimeSubfield(x.0))
        }
    }

    /// Absolute trace `x + x^p + ⋯ + x^{p^{m-1}}`, as a residue mod p.
    pub fn trace(&self, x: Element) -> u64 {
        let mut acc = Element::ZERO;
        let mut y = x;
        for _ in 0..self.m {
            acc = self.add(acc, y);
            y = self.frobenius(y);
        }
        self.prime_subfield_residue(acc)
            .expect("trace lies in the prime subfield")
    }

    /// Traces of the basis elements `1, x, …, x^{m-1}`; the trace of any
    /// element is the matching linear combination of these.
    pub fn basis_traces(&self) -> Vec<u64> {
        (0..self.m)
            .map(|i| self.trace(Element(self.p.pow(i))))
            .collect()
    }

    /// Whether `x` is a square in `F_q` (zero counts as a square).
    pub fn is_square(&self, x: Element) -> bool {
        x.is_zero() || self.pow(x, (self.q - 1) / 2) == Element::ONE
    }

    /// Quadratic character η: 1, -1, or 0.
    pub fn quadratic_character(&self, x: Element) -> i32 {
        if x.is_zero() {
            0
        } else if self.is_square(x) {
            1
        } else {
            -1
        }
    }
}

fn digits(mut value: u64, p: u64, m: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(value % p);
        value /= p;
    }
    out
}

fn encode(coeffs: &[u64], p: u64) -> u64 {
    coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c)
}
