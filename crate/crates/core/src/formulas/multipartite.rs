//! Complete multipartite graphs `K_{n₁,…,n_p}`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::report::VerificationReport;
use crate::spectra::{assemble, eigenvalues_numeric, EnergyValue};

/// Sizes sorted non-increasing, validated positive.
pub fn normalize(sizes: &[usize]) -> Result<Vec<usize>> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidArgument("part sizes must be a non-empty list of positive integers".into()));
    }
    let mut s = sizes.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    Ok(s)
}

/// `λ^{n−p} (∏(λ+nⱼ) − Σᵢ nᵢ ∏_{j≠i}(λ+nⱼ))`, the closed form with its
/// denominators cleared.
pub fn multipartite_charpoly(sizes: &[usize]) -> Result<IntPolynomial> {
    let s = normalize(sizes)?;
    let n: usize = s.iter().sum();
    let lin = |k: usize| IntPolynomial::linear_root(-(k as i64));
    let full = s.iter().fold(IntPolynomial::one(), |acc, &k| &acc * &lin(k));
    let mut sum = IntPolynomial::zero();
    for i in 0..s.len() {
        let others = s.iter().enumerate().filter(|&(j, _)| j != i).fold(IntPolynomial::one(), |acc, (_, &k)| &acc * &lin(k));
        sum = &sum + &others.scale(&BigInt::from(s[i]));
    }
    Ok(&IntPolynomial::monomial(n - s.len()) * &(&full - &sum))
}

/// `Σ nᵢ/(λ+nᵢ) − 1`.
pub fn radius_residual(sizes: &[usize], lambda: f64) -> f64 {
    sizes.iter().map(|&k| k as f64 / (lambda + k as f64)).sum::<f64>() - 1.0
}

/// The unique positive root of `Σ nᵢ/(λ+nᵢ) = 1` (zero for a single part).
pub fn multipartite_spectral_radius(sizes: &[usize]) -> Result<f64> {
    let s = normalize(sizes)?;
    if s.len() == 1 {
        return Ok(0.0);
    }
    // the residual decreases from p − 1 at 0 to below 0 at λ = n
    let (mut lo, mut hi) = (0.0f64, s.iter().sum::<usize>() as f64);
    while hi - lo > 1e-13 * hi {
        let mid = 0.5 * (lo + hi);
        if radius_residual(&s, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..3 {
        let f = radius_residual(&s, x);
        let df: f64 = -s.iter().map(|&k| k as f64 / ((x + k as f64) * (x + k as f64))).sum::<f64>();
        let nx = x - f / df;
        if nx.is_finite() && nx > 0.0 {
            x = nx;
        }
    }
    Ok(x)
}

/// `E = 2λ₁`; exact whenever the radius is an integer or quadratic surd.
pub fn multipartite_energy(sizes: &[usize]) -> Result<EnergyValue> {
    let s = normalize(sizes)?;
    if s.len() == 1 {
        return Ok(EnergyValue::zero());
    }
    let asm = assemble(&multipartite_charpoly(&s)?)?;
    let top = &asm.spectrum.entries()[0].root;
    if let Some(r) = top.to_surd() {
        return Ok(EnergyValue::from_surd(r.scaled(&BigRational::from_integer(2.into()))));
    }
    let lambda = multipartite_spectral_radius(&s)?;
    Ok(EnergyValue::numeric_only(2.0 * lambda, 1e-12 * lambda.max(1.0)))
}

/// Checks that the eigenvalues other than the radius and the `n − p`
/// zeros lie one per interval between consecutive `−nᵢ`, with `slack`.
///
/// With `n₁ ≥ … ≥ n_p` the i-th largest of them lies in `[−n_{p−i}, −n_{p−i+1}]`.
pub fn interval_check(sizes: &[usize], eigenvalues: &[f64], slack: f64) -> std::result::Result<(), String> {
    let s = normalize(sizes).map_err(|e| e.to_string())?;
    let p = s.len();
    let n: usize = s.iter().sum();
    if eigenvalues.len() != n {
        return Err(format!("expected {n} eigenvalues, got {}", eigenvalues.len()));
    }
    let mut v = eigenvalues.to_vec();
    v.sort_by(|a, b| b.total_cmp(a));
    if p == 1 {
        return v.iter().all(|x| x.abs() <= slack).then_some(()).ok_or_else(|| "edgeless graph has a non-zero eigenvalue".into());
    }
    // v[0] is the radius; then zeros; then the p − 1 negative ones
    let rest = &v[1..];
    let zeros = rest.iter().filter(|x| x.abs() <= slack).count();
    if zeros != n - p {
        return Err(format!("expected {} zero eigenvalues, found {zeros}", n - p));
    }
    let neg: Vec<f64> = rest.iter().copied().filter(|x| x.abs() > slack).collect();
    for (i, &mu) in neg.iter().enumerate() {
        let hi = -(s[p - 1 - i] as f64);
        let lo = -(s[p - 2 - i] as f64);
        if mu < lo - slack || mu > hi + slack {
            return Err(format!("eigenvalue {mu} outside [{lo}, {hi}]"));
        }
    }
    Ok(())
}

/// Closed form against the brute-force graph `K_{n₁,…,n_p}`.
pub fn verify_multipartite(sizes: &[usize]) -> Result<VerificationReport> {
    let s = normalize(sizes)?;
    let g = Graph::complete_multipartite(&s);
    let brute = charpoly(&g.adjacency())?;
    let formula = multipartite_charpoly(&s)?;
    let mut r = VerificationReport::new("multipartite").param("sizes", format!("{s:?}")).sides(&brute, &formula);
    r.expect_eq("characteristic polynomial", &brute, &formula);
    r.expect_same("detected parts", &g.is_complete_multipartite(), &Some(s.clone()));
    if s.len() >= 2 {
        let lambda = multipartite_spectral_radius(&s)?;
        r.expect_close("radius equation", radius_residual(&s, lambda), 0.0, 1e-12);
        let eig = eigenvalues_numeric(&g.adjacency().to_f64(), 1e-12)?;
        r.expect_close("radius vs eigensolver", eig[0], lambda, 1e-8);
        if let Err(e) = interval_check(&s, &eig, 1e-8) {
            r.fail(e);
        }
        let numeric: f64 = eig.iter().map(|v| v.abs()).sum();
        r.expect_close("energy = 2λ₁", numeric, multipartite_energy(&s)?.numeric, 1e-8);
    }
    Ok(r)
}
