//! Exact characteristic polynomials `det(xI − A)` of integer matrices.
//!
//! [`charpoly`] runs Hessenberg reduction modulo enough 61-bit primes to
//! exceed twice the Hadamard coefficient bound, then lifts by Chinese
//! remaindering; one extra prime re-checks the lifted result.
//! [`faddeev_leverrier`] is an independent big-integer route kept for
//! cross-validation on small inputs.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::modular::{self, Crt};
use crate::poly::IntPolynomial;

/// Largest dimension accepted by the exact routine.
pub const EXACT_DIMENSION_CAP: usize = 1000;

pub fn charpoly(a: &IntMatrix) -> Result<IntPolynomial> {
    let n = a.dim();
    if n > EXACT_DIMENSION_CAP {
        return Err(Error::DimensionCap { dim: n, cap: EXACT_DIMENSION_CAP });
    }
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let bits = modular::charpoly_bound_bits(a);
    // each prime contributes 60 bits
    let count = (bits as usize).div_ceil(60) + 1;
    let primes = modular::large_primes(count + 1);
    let (lift, check) = primes.split_at(count);

    let images: Vec<(u64, Vec<u64>)> =
        lift.par_iter().map(|&p| (p, modular::charpoly_mod(a, p))).collect();
    let mut crt = Crt::new(n + 1);
    for (p, img) in &images {
        crt.add(img, *p);
    }
    let poly = IntPolynomial::new(crt.balanced());

    let p = check[0];
    if poly.reduce_mod(p) != modular::trim(modular::charpoly_mod(a, p)) {
        return Err(Error::Internal("multi-modular charpoly failed its verification prime".into()));
    }
    Ok(poly)
}

/// `charpoly(A) mod p`, coefficients low to high in `0..p`.
pub fn charpoly_mod(a: &IntMatrix, p: u64) -> Result<Vec<u64>> {
    if !(3..modular::MODULUS_LIMIT).contains(&p) || !modular::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime below 2^61")));
    }
    Ok(modular::charpoly_mod(a, p))
}

/// Faddeev–LeVerrier recurrence over ℤ:
/// `M₀ = 0`, `Mₖ = A·Mₖ₋₁ + c_{n−k+1} I`, `c_{n−k} = −tr(A·Mₖ)/k`.
/// O(n⁴) big-integer work; intended for n ≤ 60.
pub fn faddeev_leverrier(a: &IntMatrix) -> IntPolynomial {
    let n = a.dim();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let sparse: Vec<Vec<(usize, i64)>> =
        (0..n).map(|i| a.row(i).iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, &v)| (j, v)).collect()).collect();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1} I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for &(j, v) in &sparse[i] {
                let vb = BigInt::from(v);
                for col in 0..n {
                    let x = &m[j * n + col];
                    if !x.is_zero() {
                        next[i * n + col] += &vb * x;
                    }
                }
            }
            next[i * n + i] += &c[n - k + 1];
        }
        m = next;
        // tr(A·M_k)
        let mut tr = BigInt::zero();
        for i in 0..n {
            for &(j, v) in &sparse[i] {
                tr += BigInt::from(v) * &m[j * n + i];
            }
        }
        c[n - k] = -tr / BigInt::from(k);
    }
    IntPolynomial::new(c)
}
