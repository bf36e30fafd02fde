//! Word-size modular arithmetic: primes below 2⁶¹, characteristic
//! polynomials over GF(p) by Hessenberg reduction, polynomial division mod
//! p, and Chinese remaindering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::matrix::IntMatrix;

/// Exclusive upper bound for supported moduli.
pub const MODULUS_LIMIT: u64 = 1 << 61;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime (`a` must be non-zero mod `p`).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn reduce_i64(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// The `count` largest primes below 2⁶¹, descending.
pub fn large_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = MODULUS_LIMIT - 1;
    while out.len() < count {
        if is_prime(c) {
            out.push(c);
        }
        c -= 2;
    }
    out
}

/// `count` distinct random 60-bit primes (in `[2⁵⁹, 2⁶⁰)`).
pub fn random_primes<R: Rng>(count: usize, rng: &mut R) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(count);
    while out.len() < count {
        let c = rng.gen_range((1u64 << 59)..(1u64 << 60)) | 1;
        if is_prime(c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Characteristic polynomial `det(xI − A) mod p`, coefficients low to high
/// (length `n + 1`, monic). Hessenberg reduction followed by the standard
/// leading-minor recurrence; O(n³).
pub fn charpoly_mod(a: &IntMatrix, p: u64) -> Vec<u64> {
    assert!(p > 2 && p < MODULUS_LIMIT, "modulus out of range");
    let n = a.dim();
    let mut h: Vec<Vec<u64>> = (0..n).map(|i| a.row(i).iter().map(|&v| reduce_i64(v, p)).collect()).collect();

    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in m + 1..n {
            let u = mul_mod(h[i][m - 1], inv, p);
            if u == 0 {
                continue;
            }
            // row_i -= u * row_m
            let (upper, lower) = h.split_at_mut(i);
            let row_m = &upper[m];
            for (x, &y) in lower[0][m - 1..].iter_mut().zip(&row_m[m - 1..]) {
                *x = sub_mod(*x, mul_mod(u, y, p), p);
            }
            // col_m += u * col_i
            for row in h.iter_mut() {
                let add = mul_mod(u, row[i], p);
                row[m] = add_mod(row[m], add, p);
            }
        }
    }

    // polys[k] = charpoly of the leading k×k block
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        // (x − h[m−1][m−1]) · p_{m−1}
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        let hmm = h[m - 1][m - 1];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = add_mod(cur[k + 1], c, p);
            cur[k] = sub_mod(cur[k], mul_mod(hmm, c, p), p);
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = mul_mod(t, h[i][i - 1], p);
            if t == 0 {
                break;
            }
            let coef = mul_mod(t, h[i - 1][m - 1], p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                cur[k] = sub_mod(cur[k], mul_mod(coef, c, p), p);
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

pub fn eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(out)
}

pub fn poly_pow(a: &[u64], mut e: usize, p: u64) -> Vec<u64> {
    let mut base = a.to_vec();
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(&acc, &base, p);
        }
        e >>= 1;
        if e > 0 {
            base = poly_mul(&base, &base, p);
        }
    }
    acc
}

/// Quotient and remainder modulo `p`; the divisor's leading coefficient
/// must be invertible.
pub fn poly_div_rem(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let den = trim(den.to_vec());
    assert!(!den.is_empty(), "division by zero polynomial");
    let dd = den.len() - 1;
    let mut r = trim(num.to_vec());
    if r.len() <= dd {
        return (Vec::new(), r);
    }
    let inv = inv_mod(*den.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - dd];
    for k in (0..q.len()).rev() {
        let c = mul_mod(r[k + dd], inv, p);
        if c == 0 {
            continue;
        }
        for (i, &dc) in den.iter().enumerate() {
            r[k + i] = sub_mod(r[k + i], mul_mod(c, dc, p), p);
        }
        q[k] = c;
    }
    r.truncate(dd);
    (trim(q), trim(r))
}

/// Divides out `factor^multiplicity`; returns the remainder of the first
/// failing step as the error.
pub fn deflate_mod(poly: &[u64], factor: &[u64], multiplicity: usize, p: u64) -> Result<Vec<u64>, Vec<u64>> {
    let mut cur = trim(poly.to_vec());
    for _ in 0..multiplicity {
        let (q, r) = poly_div_rem(&cur, factor, p);
        if !r.is_empty() {
            return Err(r);
        }
        cur = q;
    }
    Ok(cur)
}

/// Incremental Chinese remaindering of coefficient vectors.
#[derive(Clone, Debug)]
pub struct Crt {
    modulus: BigInt,
    residues: Vec<BigInt>,
}

impl Crt {
    pub fn new(len: usize) -> Self {
        Crt { modulus: BigInt::one(), residues: vec![BigInt::zero(); len] }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn add(&mut self, values: &[u64], p: u64) {
        let pb = BigInt::from(p);
        let m_mod_p = (&self.modulus % &pb).to_u64().unwrap();
        let inv = inv_mod(m_mod_p, p);
        for (k, r) in self.residues.iter_mut().enumerate() {
            let v = values.get(k).copied().unwrap_or(0);
            let cur = (&*r % &pb).to_u64().unwrap();
            let t = mul_mod(sub_mod(v, cur, p), inv, p);
            *r += &self.modulus * BigInt::from(t);
        }
        self.modulus *= pb;
    }

    /// Residues lifted into `(−M/2, M/2]`.
    pub fn balanced(&self) -> Vec<BigInt> {
        let half = &self.modulus >> 1usize;
        self.residues
            .iter()
            .map(|r| {
                let r = r.mod_floor(&self.modulus);
                if r > half {
                    r - &self.modulus
                } else {
                    r
                }
            })
            .collect()
    }
}

/// Number of bits needed so that `2^bits` exceeds twice the largest
/// coefficient magnitude of `det(xI − A)`.
///
/// The coefficient of `x^{n−k}` is a signed sum of k×k principal minors;
/// Hadamard bounds each minor by the product of its row norms, so every
/// coefficient is at most `∏ (1 + ‖rowᵢ‖)`.
pub fn charpoly_bound_bits(a: &IntMatrix) -> u64 {
    let log: f64 = crate::matrix::row_norms(a).iter().map(|r| (1.0 + r).log2()).sum();
    log.ceil() as u64 + 2
}

pub fn big_to_mod(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = v.mod_floor(&m);
    debug_assert!(!r.is_negative());
    r.to_u64().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(1_000_000_007));
        assert!(!is_prime(1) && !is_prime(561) && !is_prime(3_215_031_751));
        let ps = large_primes(3);
        assert_eq!(ps[0], (1u64 << 61) - 1); // Mersenne prime
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        let mut rng = rand::thread_rng();
        for p in random_primes(4, &mut rng) {
            assert!(is_prime(p) && p >> 59 == 1);
        }
    }

    #[test]
    fn charpoly_small() {
        let p = 1_000_000_007;
        // [[0,1],[1,0]] -> x^2 - 1
        let a = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(charpoly_mod(&a, p), vec![p - 1, 0, 1]);
        let z = IntMatrix::zeros(4);
        assert_eq!(charpoly_mod(&z, 7), vec![0, 0, 0, 0, 1]);
        assert_eq!(charpoly_mod(&IntMatrix::zeros(0), 7), vec![1]);
        // upper triangular with a zero subdiagonal pivot
        let t = IntMatrix::from_rows(vec![vec![2, 5, 1], vec![0, 3, 4], vec![0, 0, 7]]).unwrap();
        let expect = poly_mul(&poly_mul(&[p - 2, 1], &[p - 3, 1], p), &[p - 7, 1], p);
        assert_eq!(charpoly_mod(&t, p), expect);
    }

    #[test]
    fn crt_reconstructs_negative() {
        let ps = [1_000_000_007u64, 998_244_353];
        let vals = [-123_456_789_012_345i64, 42, 0];
        let mut crt = Crt::new(3);
        for &p in &ps {
            let r: Vec<u64> = vals.iter().map(|&v| reduce_i64(v, p)).collect();
            crt.add(&r, p);
        }
        let out: Vec<i64> = crt.balanced().iter().map(|b| b.to_i64().unwrap()).collect();
        assert_eq!(out, vals);
    }

    #[test]
    fn deflation_mod_p() {
        let p = 101;
        let f = poly_mul(&poly_pow(&[1, 1], 3, p), &[p - 2, 0, 1], p);
        assert_eq!(deflate_mod(&f, &[1, 1], 3, p).unwrap(), vec![p - 2, 0, 1]);
        assert!(deflate_mod(&f, &[1, 1], 4, p).is_err());
    }
}
