//! Finite fields GF(p^k).
//!
//! Elements are encoded as integers in `0..p^k`: base-`p` digit `i` is the
//! coefficient of `t^i` in the residue polynomial modulo the defining
//! irreducible polynomial. Addition and multiplication are tabulated, so the
//! supported fields are small (`p^k <= 1024`).

use std::fmt;

use crate::error::{Error, Result};

const MAX_FIELD_SIZE: u32 = 1024;

/// Built-in irreducible polynomials (monic, coefficients low to high
/// excluding the leading 1).
const IRREDUCIBLE_TABLE: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),       // t^2 + t + 1
    (2, 3, &[1, 1, 0]),    // t^3 + t + 1
    (3, 2, &[1, 0]),       // t^2 + 1
    (2, 4, &[1, 1, 0, 0]), // t^4 + t + 1
    (5, 2, &[2, 0]),       // t^2 + 2
    (3, 3, &[1, 2, 0]),    // t^3 + 2t + 1
    (2, 5, &[1, 0, 1, 0, 0]), // t^5 + t^2 + 1
];

/// An element of a [`GaloisField`], by encoded index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u32);

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u32,
    k: u32,
    /// Low coefficients of the monic modulus (empty for prime fields).
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl GaloisField {
    /// GF(q) for a prime power `q`, using the built-in irreducible table
    /// when `q` is not prime.
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        if k == 1 {
            return Self::with_modulus(p, 1, Vec::new());
        }
        let entry = IRREDUCIBLE_TABLE
            .iter()
            .find(|(pp, kk, _)| *pp == p && *kk == k)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "no built-in irreducible polynomial for GF({q}); supply one explicitly"
                ))
            })?;
        Self::with_modulus(p, k, entry.2.to_vec())
    }

    /// GF(q) with an explicit monic modulus, given as the `k` low coefficients
    /// (the leading 1 is implied) or as all `k+1` coefficients ending in 1.
    pub fn with_polynomial(q: u32, coeffs: &[u32]) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        let mut low: Vec<u32> = coeffs.iter().map(|c| c % p).collect();
        if low.len() == k as usize + 1 {
            if low[k as usize] != 1 {
                return Err(Error::InvalidArgument("modulus must be monic".into()));
            }
            low.pop();
        }
        if low.len() != k as usize {
            return Err(Error::InvalidArgument(format!(
                "GF({q}) needs a degree-{k} modulus, got {} coefficients",
                coeffs.len()
            )));
        }
        if k == 1 {
            // Any monic linear polynomial is irreducible; the field is GF(p).
            return Self::with_modulus(p, 1, Vec::new());
        }
        let mut full = low.clone();
        full.push(1);
        if !is_irreducible(p, &full) {
            return Err(Error::Reducible(render_poly(&full)));
        }
        Self::with_modulus(p, k, low)
    }

    fn with_modulus(p: u32, k: u32, modulus: Vec<u32>) -> Result<Self> {
        let q = p.checked_pow(k).filter(|&q| q <= MAX_FIELD_SIZE).ok_or_else(|| {
            Error::InvalidArgument(format!("field size {p}^{k} exceeds {MAX_FIELD_SIZE}"))
        })?;
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        let digits: Vec<Vec<u32>> = (0..q).map(|e| to_digits(e, p, k)).collect();
        for a in 0..qs {
            for b in 0..qs {
                let s: Vec<u32> = digits[a].iter().zip(&digits[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = from_digits(&s, p);
                mul[a * qs + b] = from_digits(&mul_mod_poly(&digits[a], &digits[b], &modulus, p), p);
            }
        }
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for a in 0..qs {
            neg[a] = (0..q).find(|&b| add[a * qs + b as usize] == 0).unwrap_or(0);
            if a != 0 {
                inv[a] = (1..q).find(|&b| mul[a * qs + b as usize] == 1).ok_or_else(|| {
                    Error::Internal(format!("element {a} has no inverse; modulus is not irreducible"))
                })?;
            }
        }
        Ok(GaloisField { p, k, modulus, add, mul, neg, inv })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.k)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[(a.0 * self.order() + b.0) as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[(a.0 * self.order() + b.0) as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a.0 != 0).then(|| FieldElement(self.inv[a.0 as usize]))
    }

    /// Coefficients of the residue polynomial, low degree first.
    pub fn coordinates(&self, a: FieldElement) -> Vec<u32> {
        to_digits(a.0, self.p, self.k)
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        let mut x = a;
        let mut n = 1;
        while x != self.one() {
            x = self.mul(x, a);
            n += 1;
        }
        Some(n)
    }

    /// The defining polynomial rendered in `t`.
    pub fn modulus_string(&self) -> String {
        let mut full = self.modulus.clone();
        full.push(1);
        if self.k == 1 {
            return "t".to_string();
        }
        render_poly(&full)
    }

    pub fn element_string(&self, a: FieldElement) -> String {
        if self.k == 1 {
            return a.0.to_string();
        }
        let c = self.coordinates(a);
        if c.iter().all(|&v| v == 0) {
            return "0".into();
        }
        render_poly(&c)
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}) mod {}", self.p, self.k, self.modulus_string())
        }
    }
}

/// `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn to_digits(mut e: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = e % p;
            e /= p;
            d
        })
        .collect()
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product of two residues modulo the monic polynomial `t^k + modulus`.
fn mul_mod_poly(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = a.len();
    if k == 0 {
        return Vec::new();
    }
    let mut prod = vec![0u32; 2 * k - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // t^k = -modulus(t)
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + (p - c) * m) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// Irreducibility over GF(p) by trial division with every monic polynomial of
/// degree up to half the input degree. `poly` is low-to-high and monic.
pub fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut divisor = to_digits(low, p, d as u32);
            divisor.push(1);
            if rem_mod_p(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn rem_mod_p(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn render_poly(c: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &v) in c.iter().enumerate().rev() {
        if v == 0 {
            continue;
        }
        let coeff = if v == 1 && i > 0 { String::new() } else { v.to_string() };
        terms.push(match i {
            0 => coeff,
            1 => format!("{coeff}t"),
            _ => format!("{coeff}t^{i}"),
        });
    }
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn builtin_moduli_are_irreducible() {
        for &(p, k, low) in IRREDUCIBLE_TABLE {
            let mut full = low.to_vec();
            full.push(1);
            assert!(is_irreducible(p, &full), "p={p} k={k}");
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
            let f = GaloisField::new(q).unwrap();
            let has_generator = f.elements().skip(1).any(|a| f.multiplicative_order(a) == Some(q - 1));
            assert!(has_generator, "GF({q})");
        }
    }

    #[test]
    fn field_axioms_gf4() {
        let f = GaloisField::new(4).unwrap();
        let els: Vec<_> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, f.zero()), a);
            assert_eq!(f.mul(a, f.one()), a);
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            if let Some(i) = f.inv(a) {
                assert_eq!(f.mul(a, i), f.one());
            }
            for &b in &els {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // t^2 + 1 = (t + 1)^2 over GF(2)
        assert!(matches!(GaloisField::with_polynomial(4, &[1, 0]), Err(Error::Reducible(_))));
        // t^2 + 1 is irreducible over GF(3)
        assert!(GaloisField::with_polynomial(9, &[1, 0, 1]).is_ok());
        assert!(GaloisField::new(6).is_err());
        assert!(GaloisField::new(49).is_err());
    }
}
