//! Exact arithmetic in GF(p^e) for small orders.
//!
//! Elements are polynomials of degree `< e` over GF(p), stored as explicit
//! coefficient vectors (constant term first) and reduced modulo the
//! lexicographically smallest monic irreducible of degree `e`. The element
//! order used everywhere downstream is `rank = c0 + c1*p + ... + c_{e-1}*p^(e-1)`,
//! so the prime field comes first as `0, 1, ..., p-1`.
//!
//! Besides the coefficient-level API, a [`FieldSpec`] carries Cayley tables
//! indexed by element rank. The geometry layers work on ranks (`u16`) and
//! use those tables in their inner loops.

use std::fmt;

use thiserror::Error;

/// Default cap on the field order.
pub const DEFAULT_MAX_ORDER: u32 = 16;
/// Absolute cap; a configured bound above this is clamped.
pub const HARD_MAX_ORDER: u32 = 256;
/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{e} exceeds the bound {bound}")]
    TooLarge { p: u32, e: u32, bound: u32 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime power within the supported range")]
    NotPrimePower(u32),
    #[error("invalid field element {0:?}")]
    BadElement(String),
    #[error("invalid field order {0:?}")]
    BadOrder(String),
}

pub fn is_prime(n: u32) -> bool {
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

/// Splits `q` into `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// All prime powers `2 <= q <= bound`, ascending.
pub fn supported_orders(bound: u32) -> Vec<u32> {
    (2..=bound.min(HARD_MAX_ORDER))
        .filter(|&q| prime_power(q).is_some())
        .collect()
}

/// A field element: `e` coefficients in `[0, p)`, constant term first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    p: u8,
    e: u8,
    coeffs: [u8; MAX_DEGREE],
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs[..self.e as usize]
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.e as u32
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0)
    }

    /// Position in the field's element enumeration.
    pub fn rank(&self) -> u16 {
        let p = self.p as u32;
        self.coeffs()
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * p + c as u32) as u16
    }

    fn same_field(&self, other: &FieldElement) -> bool {
        self.p == other.p && self.e == other.e
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}):{}", self.p, self.e, self)
    }
}

/// Base-p digits, constant term first, with high-order zero digits dropped
/// (at least one digit is always written). In GF(4), `"01"` is the class of x.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coeffs();
        let len = coeffs.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        for &c in &coeffs[..len] {
            let digit = char::from_digit(c as u32, 36).expect("coefficient below 36");
            write!(f, "{digit}")?;
        }
        Ok(())
    }
}

/// A finite field GF(p^e) with its canonical modulus and rank-indexed tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// `"p^e"`, or just `"p"` for a prime field.
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.e)
        }
    }
}

/// Builds GF(p^e) under the default order bound.
pub fn make_field(p: u32, e: u32) -> Result<FieldSpec, GfError> {
    FieldSpec::with_bound(p, e, DEFAULT_MAX_ORDER)
}

impl FieldSpec {
    pub fn new(p: u32, e: u32) -> Result<Self, GfError> {
        make_field(p, e)
    }

    /// Field of order `q` (a prime power) under the default bound.
    pub fn of_order(q: u32) -> Result<Self, GfError> {
        let (p, e) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        make_field(p, e)
    }

    /// Parses `"p^e"` or a plain order such as `"9"`.
    pub fn parse_order(text: &str) -> Result<(u32, u32), GfError> {
        let bad = || GfError::BadOrder(text.to_string());
        let text = text.trim();
        match text.split_once('^') {
            Some((p, e)) => {
                let p: u32 = p.trim().parse().map_err(|_| bad())?;
                let e: u32 = e.trim().parse().map_err(|_| bad())?;
                Ok((p, e))
            }
            None => {
                let q: u32 = text.parse().map_err(|_| bad())?;
                prime_power(q).ok_or(GfError::NotPrimePower(q))
            }
        }
    }

    pub fn with_bound(p: u32, e: u32, bound: u32) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if e == 0 {
            return Err(GfError::ZeroDegree);
        }
        let bound = bound.min(HARD_MAX_ORDER);
        let too_large = GfError::TooLarge { p, e, bound };
        if e as usize > MAX_DEGREE {
            return Err(too_large);
        }
        let q = p.checked_pow(e).filter(|&q| q <= bound).ok_or(too_large)?;
        let modulus = canonical_modulus(p, e);
        let mut field = FieldSpec {
            p,
            e,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let elems: Vec<FieldElement> = (0..q).map(|i| self.element(i as u16)).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = self.poly_add(a, b).rank();
                mul[i * q + j] = self.poly_mul(a, b).rank();
            }
        }
        let neg = elems.iter().map(|a| self.poly_neg(a).rank()).collect();
        // Exhaustive inverse search; index 0 maps to 0 and is never read.
        let inv = (0..q)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    (1..q).find(|&j| mul[i * q + j] == 1).expect("field has inverses") as u16
                }
            })
            .collect();
        self.add = add;
        self.mul = mul;
        self.neg = neg;
        self.inv = inv;
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first, monic of degree `e`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// The element with the given enumeration rank.
    pub fn element(&self, rank: u16) -> FieldElement {
        assert!((rank as u32) < self.q, "rank {rank} out of range for GF({})", self.q);
        let mut coeffs = [0u8; MAX_DEGREE];
        let mut r = rank as u32;
        for c in coeffs.iter_mut().take(self.e as usize) {
            *c = (r % self.p) as u8;
            r /= self.p;
        }
        FieldElement {
            p: self.p as u8,
            e: self.e as u8,
            coeffs,
        }
    }

    /// Element from coefficients (constant term first). Missing high-order
    /// coefficients are zero; values are reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, GfError> {
        if coeffs.len() > self.e as usize {
            return Err(GfError::BadElement(format!("{coeffs:?}")));
        }
        let mut out = [0u8; MAX_DEGREE];
        for (slot, &c) in out.iter_mut().zip(coeffs) {
            *slot = (c % self.p) as u8;
        }
        Ok(FieldElement {
            p: self.p as u8,
            e: self.e as u8,
            coeffs: out,
        })
    }

    /// Parses the text form written by `Display`: 1 to `e` base-p digits,
    /// constant term first.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement, GfError> {
        let bad = || GfError::BadElement(text.to_string());
        if text.is_empty() || text.chars().count() > self.e as usize {
            return Err(bad());
        }
        let mut coeffs = [0u8; MAX_DEGREE];
        for (slot, ch) in coeffs.iter_mut().zip(text.chars()) {
            let d = ch.to_digit(36).filter(|&d| d < self.p).ok_or_else(bad)?;
            *slot = d as u8;
        }
        Ok(FieldElement {
            p: self.p as u8,
            e: self.e as u8,
            coeffs,
        })
    }

    /// All `q` elements in rank order: `0, 1, ...`.
    pub fn enumerate_elements(&self) -> Vec<FieldElement> {
        (0..self.q).map(|r| self.element(r as u16)).collect()
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        a.p as u32 == self.p && a.e as u32 == self.e
    }

    fn check(&self, a: &FieldElement) -> Result<(), GfError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn check2(&self, a: &FieldElement, b: &FieldElement) -> Result<(), GfError> {
        self.check(a)?;
        if a.same_field(b) {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check2(a, b)?;
        Ok(self.poly_add(a, b))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check2(a, b)?;
        Ok(self.poly_add(a, &self.poly_neg(b)))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        Ok(self.poly_neg(a))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check2(a, b)?;
        Ok(self.poly_mul(a, b))
    }

    /// Multiplicative inverse, found by exhaustive search over the field.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        let inverse = self
            .enumerate_elements()
            .into_iter()
            .skip(1)
            .find(|b| self.poly_mul(a, b).rank() == 1)
            .expect("nonzero elements are invertible");
        Ok(inverse)
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check2(a, b)?;
        let binv = self.inv(b)?;
        Ok(self.poly_mul(a, &binv))
    }

    /// `a^n`; negative exponents require `a != 0`. `0^0 = 1`.
    pub fn pow(&self, a: &FieldElement, n: i64) -> Result<FieldElement, GfError> {
        self.check(a)?;
        let base = if n < 0 { self.inv(a)? } else { *a };
        let mut exp = n.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.poly_mul(&acc, &sq);
            }
            sq = self.poly_mul(&sq, &sq);
            exp >>= 1;
        }
        Ok(acc)
    }

    fn poly_add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut out = *a;
        for i in 0..self.e as usize {
            out.coeffs[i] = ((a.coeffs[i] as u32 + b.coeffs[i] as u32) % self.p) as u8;
        }
        out
    }

    fn poly_neg(&self, a: &FieldElement) -> FieldElement {
        let mut out = *a;
        for i in 0..self.e as usize {
            out.coeffs[i] = ((self.p - a.coeffs[i] as u32) % self.p) as u8;
        }
        out
    }

    fn poly_mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let e = self.e as usize;
        let p = self.p;
        let mut prod = [0u32; 2 * MAX_DEGREE];
        for i in 0..e {
            for j in 0..e {
                prod[i + j] = (prod[i + j] + a.coeffs[i] as u32 * b.coeffs[j] as u32) % p;
            }
        }
        // x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
        for deg in (e..2 * e).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for k in 0..e {
                let sub = lead * self.modulus[k] % p;
                prod[deg - e + k] = (prod[deg - e + k] + p - sub) % p;
            }
        }
        let mut out = *a;
        for i in 0..e {
            out.coeffs[i] = prod[i] as u8;
        }
        out
    }

    // Rank-level arithmetic backed by the Cayley tables.

    #[inline]
    pub fn add_r(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul_r(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg_r(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub_r(&self, a: u16, b: u16) -> u16 {
        self.add_r(a, self.neg_r(b))
    }

    /// Inverse of a nonzero rank. Panics on zero.
    #[inline]
    pub fn inv_r(&self, a: u16) -> u16 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }
}

/// Polynomials over GF(p) with constant term first, used for modulus search.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = (1..p).find(|&x| x * den[dd] % p == 1).expect("nonzero lead");
    while rem.len() > dd {
        let top = rem.len() - 1;
        let c = rem[top] * lead_inv % p;
        if c != 0 {
            for k in 0..=dd {
                let idx = top - dd + k;
                rem[idx] = (rem[idx] + p - c * den[k] % p) % p;
            }
        }
        rem.pop();
    }
    while rem.len() > 1 && *rem.last().unwrap() == 0 {
        rem.pop();
    }
    rem
}

/// Monic polynomials of degree `d`, in coefficient-tuple order with the
/// constant term most significant.
fn monic_of_degree(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = p.pow(d);
    (0..count).map(move |n| {
        let mut coeffs = vec![0u32; d as usize + 1];
        let mut r = n;
        for k in (0..d as usize).rev() {
            coeffs[k] = r % p;
            r /= p;
        }
        coeffs[d as usize] = 1;
        coeffs
    })
}

/// True if the monic polynomial has no monic factor of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg == 0 {
        return false;
    }
    (1..=deg / 2).all(|d| {
        monic_of_degree(p, d).all(|f| {
            let r = poly_rem(poly, &f, p);
            r.iter().any(|&c| c != 0)
        })
    })
}

fn canonical_modulus(p: u32, e: u32) -> Vec<u32> {
    monic_of_degree(p, e)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(make_field(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(make_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(make_field(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(make_field(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn quadratic_moduli_by_exhaustion() {
        // Over GF(2) the monic quadratics are x^2, x^2+1, x^2+x, x^2+x+1;
        // only the last has no root.
        let roots = |c: &[u32]| (0..2).any(|x| (c[0] + c[1] * x + x * x).is_multiple_of(2));
        let irreducible: Vec<_> = monic_of_degree(2, 2).filter(|c| !roots(c)).collect();
        assert_eq!(irreducible, vec![vec![1, 1, 1]]);
        // Over GF(3), x^2+1 has no root and sorts first among root-free ones.
        let roots3 = |c: &[u32]| (0..3).any(|x| (c[0] + c[1] * x + x * x).is_multiple_of(3));
        let first = monic_of_degree(3, 2).find(|c| !roots3(c)).unwrap();
        assert_eq!(first, vec![1, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_field(4, 1), Err(GfError::NotPrime(4)));
        assert_eq!(make_field(2, 0), Err(GfError::ZeroDegree));
        assert!(matches!(make_field(2, 5), Err(GfError::TooLarge { .. })));
        assert!(matches!(make_field(17, 1), Err(GfError::TooLarge { .. })));
        assert!(FieldSpec::with_bound(17, 1, 32).is_ok());
        assert!(FieldSpec::with_bound(2, 5, 32).is_ok());
    }

    #[test]
    fn small_field_examples() {
        let f3 = make_field(3, 1).unwrap();
        let two = f3.element(2);
        assert_eq!(f3.add(&two, &two).unwrap(), f3.one());

        let f4 = make_field(2, 2).unwrap();
        let alpha = f4.from_coeffs(&[0, 1]).unwrap();
        let alpha1 = f4.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f4.add(&alpha, &alpha).unwrap(), f4.zero());
        assert_eq!(f4.mul(&alpha, &alpha).unwrap(), alpha1);
        assert_eq!(f4.inv(&alpha).unwrap(), alpha1);
        assert_eq!(f4.mul(&alpha, &f4.one()).unwrap(), alpha);
        assert_eq!(f4.add(&alpha, &f4.zero()).unwrap(), alpha);
        assert_eq!(f4.inv(&f4.zero()), Err(GfError::DivisionByZero));
    }

    #[test]
    fn enumeration_order() {
        let f2 = make_field(2, 1).unwrap();
        let ranks: Vec<_> = f2.enumerate_elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(ranks, ["0", "1"]);
        let f3 = make_field(3, 1).unwrap();
        let ranks: Vec<_> = f3.enumerate_elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(ranks, ["0", "1", "2"]);
        let f4 = make_field(2, 2).unwrap();
        let coeffs: Vec<Vec<u8>> = f4
            .enumerate_elements()
            .iter()
            .map(|e| e.coeffs().to_vec())
            .collect();
        assert_eq!(coeffs, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn mismatched_fields_rejected() {
        let f4 = make_field(2, 2).unwrap();
        let f2 = make_field(2, 1).unwrap();
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f4.add(&f4.one(), &f2.one()), Err(GfError::FieldMismatch));
        assert_eq!(f3.mul(&f2.one(), &f2.one()), Err(GfError::FieldMismatch));
        assert_eq!(f3.neg(&f4.one()), Err(GfError::FieldMismatch));
    }

    #[test]
    fn element_text_form() {
        let f4 = make_field(2, 2).unwrap();
        let texts: Vec<_> = f4.enumerate_elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(texts, ["0", "1", "01", "11"]);
        assert_eq!(f4.parse_element("00").unwrap(), f4.zero());
        assert_eq!(f4.parse_element("10").unwrap(), f4.one());
        assert!(f4.parse_element("2").is_err());
        assert!(f4.parse_element("011").is_err());
        assert!(f4.parse_element("").is_err());
        let f13 = make_field(13, 1).unwrap();
        assert_eq!(f13.element(12).to_string(), "c");
        assert_eq!(f13.parse_element("c").unwrap(), f13.element(12));
    }

    #[test]
    fn pow_and_negative_exponents() {
        let f9 = make_field(3, 2).unwrap();
        for a in f9.enumerate_elements().into_iter().skip(1) {
            assert_eq!(f9.pow(&a, 8).unwrap(), f9.one());
            assert_eq!(f9.pow(&a, -1).unwrap(), f9.inv(&a).unwrap());
        }
        assert_eq!(f9.pow(&f9.zero(), 0).unwrap(), f9.one());
        assert_eq!(f9.pow(&f9.zero(), -2), Err(GfError::DivisionByZero));
    }

    #[test]
    fn order_parsing() {
        assert_eq!(FieldSpec::parse_order("9").unwrap(), (3, 2));
        assert_eq!(FieldSpec::parse_order("2^3").unwrap(), (2, 3));
        assert_eq!(FieldSpec::parse_order("7").unwrap(), (7, 1));
        assert!(FieldSpec::parse_order("6").is_err());
        assert!(FieldSpec::parse_order("x").is_err());
        assert_eq!(supported_orders(16), [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
    }
}
