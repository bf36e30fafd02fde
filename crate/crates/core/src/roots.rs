//! Closed-form and numeric roots: exact quadratic surds, the casus
//! irreducibilis cubic, real-root isolation, and polynomial identity checks
//! by evaluation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::surd::{split_square, SurdSum};

/// An eigenvalue in the most exact form available.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExactRoot {
    Integer { value: i64 },
    /// `(a + b·√d)/2`, `d > 1` squarefree.
    QuadraticSurd { a: i64, b: i64, d: i64 },
    NumericOnly { value: f64, error: f64 },
}

impl ExactRoot {
    pub fn integer(v: i64) -> Self {
        ExactRoot::Integer { value: v }
    }

    pub fn value(&self) -> f64 {
        match *self {
            ExactRoot::Integer { value } => value as f64,
            ExactRoot::QuadraticSurd { a, b, d } => (a as f64 + b as f64 * (d as f64).sqrt()) / 2.0,
            ExactRoot::NumericOnly { value, .. } => value,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ExactRoot::NumericOnly { .. })
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExactRoot::Integer { value: 0 })
    }

    pub fn to_surd(&self) -> Option<SurdSum> {
        match *self {
            ExactRoot::Integer { value } => Some(SurdSum::integer(value)),
            ExactRoot::QuadraticSurd { a, b, d } => {
                let half = |v: i64| BigRational::new(v.into(), 2.into());
                let mut s = SurdSum::rational(half(a));
                s.add_assign(&SurdSum::sqrt_term(half(b), d as u64));
                Some(s)
            }
            ExactRoot::NumericOnly { .. } => None,
        }
    }

    /// Exact sign: −1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match *self {
            ExactRoot::Integer { value } => value.signum() as i32,
            ExactRoot::QuadraticSurd { a, b, d } => {
                let (sa, sb) = (a.signum(), b.signum());
                if sa >= 0 && sb >= 0 {
                    return (sa + sb).signum() as i32;
                }
                if sa <= 0 && sb <= 0 {
                    return -1;
                }
                // mixed signs: compare a² with b²d
                let a2 = i128::from(a) * i128::from(a);
                let b2d = i128::from(b) * i128::from(b) * i128::from(d);
                match a2.cmp(&b2d) {
                    Ordering::Greater => sa as i32,
                    Ordering::Less => sb as i32,
                    Ordering::Equal => 0,
                }
            }
            ExactRoot::NumericOnly { value, .. } => {
                if value > 0.0 {
                    1
                } else if value < 0.0 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Multiplies the root by an integer.
    pub fn scaled(&self, k: i64) -> ExactRoot {
        match *self {
            ExactRoot::Integer { value } => ExactRoot::integer(value * k),
            ExactRoot::QuadraticSurd { a, b, d } => {
                if k == 0 {
                    ExactRoot::integer(0)
                } else {
                    ExactRoot::QuadraticSurd { a: a * k, b: b * k, d }
                }
            }
            ExactRoot::NumericOnly { value, error } => {
                ExactRoot::NumericOnly { value: value * k as f64, error: error * (k.unsigned_abs() as f64) }
            }
        }
    }

    /// `x² − a·x + (a² − b²d)/4` for a surd; `x − v` for an integer.
    pub fn minimal_polynomial(&self) -> Option<IntPolynomial> {
        match *self {
            ExactRoot::Integer { value } => Some(IntPolynomial::linear_root(value)),
            ExactRoot::QuadraticSurd { a, b, d } => {
                let a = BigInt::from(a);
                let c0 = (&a * &a - BigInt::from(b) * BigInt::from(b) * BigInt::from(d)) / BigInt::from(4);
                Some(IntPolynomial::new(vec![c0, -a, BigInt::from(1)]))
            }
            ExactRoot::NumericOnly { .. } => None,
        }
    }

    /// Exact comparison for exact roots, numeric otherwise.
    pub fn cmp_value(&self, other: &ExactRoot) -> Ordering {
        if let (Some(x), Some(y)) = (self.to_surd(), other.to_surd()) {
            if let Some(sign) = surd_difference_sign(&x, &y) {
                return sign;
            }
        }
        self.value().total_cmp(&other.value())
    }
}

/// Sign of `x − y` when the difference involves at most one radicand.
fn surd_difference_sign(x: &SurdSum, y: &SurdSum) -> Option<Ordering> {
    let mut diff = x.clone();
    diff.add_assign(&y.scaled(&BigRational::from_integer((-1).into())));
    surd_sign(&diff)
}

/// Exact sign of `r + c·√d`; `None` when more than one radicand is present.
pub fn surd_sign(s: &SurdSum) -> Option<Ordering> {
    let zero = BigRational::zero();
    let r = s.rational_part();
    let rad: Vec<_> = s.radicals().iter().collect();
    match rad.as_slice() {
        [] => Some(r.cmp(&zero)),
        [(d, c)] => {
            let (sr, sc) = (r.cmp(&zero), (*c).cmp(&zero));
            if sr != Ordering::Less && sc != Ordering::Less {
                return Some(Ordering::Greater);
            }
            if sr != Ordering::Greater && sc != Ordering::Greater {
                return Some(Ordering::Less);
            }
            let r2 = r * r;
            let c2d = *c * *c * BigRational::from_integer(BigInt::from(**d));
            Some(match r2.cmp(&c2d) {
                Ordering::Greater => sr,
                Ordering::Less => sc,
                Ordering::Equal => Ordering::Equal,
            })
        }
        _ => None,
    }
}

impl fmt::Display for ExactRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactRoot::NumericOnly { value, error } => write!(f, "{value:.12} (±{error:.1e})"),
            exact => write!(f, "{}", exact.to_surd().expect("exact root")),
        }
    }
}

/// Roots of `x² + a₁x + a₀`, larger first.
pub fn solve_quadratic(a1: i64, a0: i64) -> Result<[ExactRoot; 2]> {
    let disc = i128::from(a1) * i128::from(a1) - 4 * i128::from(a0);
    if disc < 0 {
        return Err(Error::NonRealRoots);
    }
    let disc = u64::try_from(disc).map_err(|_| Error::InvalidArgument("quadratic discriminant exceeds 64 bits".into()))?;
    let (s, f) = split_square(disc);
    let s = s as i64;
    if f == 1 {
        // disc ≡ a₁² (mod 4), so s and a₁ have equal parity
        return Ok([ExactRoot::integer((-a1 + s) / 2), ExactRoot::integer((-a1 - s) / 2)]);
    }
    let d = f as i64;
    Ok([ExactRoot::QuadraticSurd { a: -a1, b: s, d }, ExactRoot::QuadraticSurd { a: -a1, b: -s, d }])
}

/// Monic cubic `x³ + bx² + cx + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicCoefficients {
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl CubicCoefficients {
    pub fn new(b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        CubicCoefficients { b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn from_poly(p: &IntPolynomial) -> Result<Self> {
        if p.degree() != Some(3) || !p.is_monic() {
            return Err(Error::InvalidArgument(format!("{p} is not a monic cubic")));
        }
        Ok(CubicCoefficients { b: p.coeff(2), c: p.coeff(1), d: p.coeff(0) })
    }

    pub fn to_poly(&self) -> IntPolynomial {
        IntPolynomial::new(vec![self.d.clone(), self.c.clone(), self.b.clone(), BigInt::from(1)])
    }

    /// `(α, β)` of the depressed cubic `y³ + αy + β` under `x = y − b/3`.
    pub fn depressed(&self) -> (BigRational, BigRational) {
        let r = |v: &BigInt| BigRational::from_integer(v.clone());
        let (b, c, d) = (r(&self.b), r(&self.c), r(&self.d));
        let three = BigRational::from_integer(3.into());
        let alpha = &c - &b * &b / &three;
        let beta = BigRational::from_integer(2.into()) * &b * &b * &b / BigRational::from_integer(27.into()) - &b * &c / &three + d;
        (alpha, beta)
    }

    /// `Δ = (α/3)³ + (β/2)²`; negative iff three distinct real roots.
    pub fn discriminant(&self) -> BigRational {
        let (alpha, beta) = self.depressed();
        let a3 = alpha / BigRational::from_integer(3.into());
        let b2 = beta / BigRational::from_integer(2.into());
        &a3 * &a3 * &a3 + &b2 * &b2
    }

    fn l1_norm(&self) -> f64 {
        1.0 + [&self.b, &self.c, &self.d].iter().map(|v| v.abs().to_f64().unwrap_or(f64::INFINITY)).sum::<f64>()
    }
}

/// Three real roots `γ₁ ≥ γ₂ ≥ γ₃` of a cubic with `Δ < 0`.
pub fn solve_cubic(cubic: &CubicCoefficients) -> Result<[f64; 3]> {
    let delta = cubic.discriminant();
    if !delta.is_negative() {
        return Err(Error::NonNegativeDiscriminant(format!("{}/{}", delta.numer(), delta.denom())));
    }
    let (alpha, beta) = cubic.depressed();
    let alpha = alpha.to_f64().unwrap_or(f64::NAN);
    let beta = beta.to_f64().unwrap_or(f64::NAN);
    let b = cubic.b.to_f64().unwrap_or(f64::NAN);
    let c = cubic.c.to_f64().unwrap_or(f64::NAN);
    let d = cubic.d.to_f64().unwrap_or(f64::NAN);

    let m = 2.0 * (-alpha / 3.0).sqrt();
    let arg = ((3.0 * beta) / (alpha * m)).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    let f = |x: f64| ((x + b) * x + c) * x + d;
    let df = |x: f64| (3.0 * x + 2.0 * b) * x + c;
    let mut roots = [0.0f64; 3];
    for (k, r) in roots.iter_mut().enumerate() {
        let y = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
        let mut x = y - b / 3.0;
        let slope = df(x);
        if slope != 0.0 {
            x -= f(x) / slope;
        }
        *r = x;
    }
    roots.sort_by(|x, y| y.total_cmp(x));

    let norm = cubic.l1_norm();
    for &g in &roots {
        if f(g).abs() >= 1e-6 * norm.max(1.0) {
            return Err(Error::Internal(format!("cubic root {g} failed its residual check")));
        }
    }
    let [g1, g2, g3] = roots;
    let checks = [(g1 + g2 + g3, -b), (g1 * g2 + g1 * g3 + g2 * g3, c), (g1 * g2 * g3, -d)];
    for (got, want) in checks {
        if (got - want).abs() > 1e-9 * want.abs().max(1.0) {
            return Err(Error::Internal(format!("cubic Vieta check failed: {got} vs {want}")));
        }
    }
    Ok(roots)
}

/// All real roots of a squarefree polynomial, ascending, with error bounds.
/// Fails with [`Error::NonRealRoots`] when fewer than `deg` real roots exist.
pub fn real_roots(poly: &IntPolynomial) -> Result<Vec<(f64, f64)>> {
    let Some(deg) = poly.degree() else {
        return Err(Error::InvalidArgument("zero polynomial has no finite root set".into()));
    };
    let lead = poly.leading().to_f64().unwrap_or(f64::NAN);
    let c: Vec<f64> = poly.coeffs().iter().map(|v| v.to_f64().unwrap_or(f64::NAN) / lead).collect();
    if c.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidArgument("coefficients exceed floating-point range".into()));
    }
    let roots = roots_f64(&c);
    if roots.len() < deg {
        return Err(Error::NonRealRoots);
    }
    let dp = poly.derivative();
    Ok(roots
        .into_iter()
        .map(|r| {
            let slope = dp.eval_f64(r).abs().max(f64::MIN_POSITIVE);
            let resid = poly.eval_f64(r).abs();
            let err = resid / slope + 4.0 * f64::EPSILON * r.abs().max(1.0);
            (r, err)
        })
        .collect())
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * x + v)
}

/// Roots of `Σ c_i x^i` by derivative interlacing; ascending.
fn roots_f64(c: &[f64]) -> Vec<f64> {
    let deg = c.len() - 1;
    match deg {
        0 => return vec![],
        1 => return vec![-c[0] / c[1]],
        _ => {}
    }
    let deriv: Vec<f64> = (1..=deg).map(|i| c[i] * i as f64).collect();
    let crit = roots_f64(&deriv);
    let bound = 1.0 + c[..deg].iter().map(|v| (v / c[deg]).abs()).fold(0.0, f64::max);
    let mut pts = Vec::with_capacity(crit.len() + 2);
    pts.push(-bound);
    pts.extend(crit.into_iter().filter(|x| x.abs() < bound));
    pts.push(bound);

    let mut out: Vec<f64> = Vec::new();
    for w in pts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (flo, fhi) = (horner(c, lo), horner(c, hi));
        if flo == 0.0 {
            out.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        out.push(bisect(c, &deriv, lo, hi, flo));
    }
    if horner(c, *pts.last().unwrap()) == 0.0 {
        out.push(*pts.last().unwrap());
    }
    out.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * a.abs().max(1.0));
    out
}

fn bisect(c: &[f64], deriv: &[f64], mut lo: f64, mut hi: f64, mut flo: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = horner(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..2 {
        let s = horner(deriv, x);
        if s == 0.0 {
            break;
        }
        let nx = x - horner(c, x) / s;
        if nx >= lo && nx <= hi {
            x = nx;
        }
    }
    x
}

/// Checks `lhs(x) = rhs(x)` at `x = 1..=degree_bound+1`; for polynomials of
/// degree at most `degree_bound` this proves equality. Returns the first
/// disagreeing sample point, if any.
pub fn poly_identity_check(
    lhs: impl Fn(i64) -> BigInt + Sync,
    rhs: impl Fn(i64) -> BigInt + Sync,
    degree_bound: usize,
) -> std::result::Result<(), i64> {
    use rayon::prelude::*;
    let bad: Option<i64> =
        (1..=degree_bound as i64 + 1).into_par_iter().filter(|&x| lhs(x) != rhs(x)).min();
    match bad {
        None => Ok(()),
        Some(x) => Err(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(a: i64, b: i64, d: i64) -> ExactRoot {
        ExactRoot::QuadraticSurd { a, b, d }
    }

    #[test]
    fn quadratic_cases() {
        assert_eq!(solve_quadratic(-2, -8).unwrap(), [ExactRoot::integer(4), ExactRoot::integer(-2)]);
        assert_eq!(solve_quadratic(-4, -20).unwrap(), [surd(4, 4, 6), surd(4, -4, 6)]);
        assert_eq!(solve_quadratic(0, -1).unwrap(), [ExactRoot::integer(1), ExactRoot::integer(-1)]);
        assert_eq!(solve_quadratic(-1, -1).unwrap(), [surd(1, 1, 5), surd(1, -1, 5)]);
        assert!(matches!(solve_quadratic(0, 1), Err(Error::NonRealRoots)));
        assert_eq!(surd(4, 4, 6).to_string(), "2+2*sqrt(6)");
    }

    #[test]
    fn quadratic_roots_satisfy_minimal_polynomial() {
        for (a1, a0) in [(-4, -20), (-6, -48), (8, -32), (-1, -1)] {
            for r in solve_quadratic(a1, a0).unwrap() {
                let m = r.minimal_polynomial().unwrap();
                assert_eq!(m, IntPolynomial::from_i64(&[a0, a1, 1]));
            }
        }
    }

    #[test]
    fn exact_signs_and_order() {
        assert_eq!(surd(2, -2, 7).signum(), -1);
        assert_eq!(surd(6, -2, 7).signum(), 1);
        assert_eq!(surd(-6, 2, 7).signum(), -1);
        assert_eq!(surd(2, 2, 7).cmp_value(&ExactRoot::integer(7)), Ordering::Less);
        assert_eq!(surd(2, 2, 7).cmp_value(&surd(2, 2, 7)), Ordering::Equal);
        assert_eq!(surd(1, 1, 2).scaled(-2), surd(-2, -2, 2));
    }

    #[test]
    fn cubic_gl3() {
        let cubic = CubicCoefficients::new(-34, -312, -576);
        let r = solve_cubic(&cubic).unwrap();
        assert!((r.iter().sum::<f64>() - 34.0).abs() < 1e-9);
        assert!(r[0] >= r[1] && r[1] >= r[2]);
    }

    #[test]
    fn cubic_depressed_form() {
        let cubic = CubicCoefficients::new(0, -384, 2304);
        let (a, b) = cubic.depressed();
        assert_eq!(a, BigRational::from_integer((-384).into()));
        assert_eq!(b, BigRational::from_integer(2304.into()));
        let r = solve_cubic(&cubic).unwrap();
        assert!((r[0] * r[1] * r[2] + 2304.0).abs() < 1e-6);
    }

    #[test]
    fn cubic_rejects_nonnegative_discriminant() {
        assert!(matches!(solve_cubic(&CubicCoefficients::new(0, 0, 0)), Err(Error::NonNegativeDiscriminant(_))));
        assert!(solve_cubic(&CubicCoefficients::new(0, 1, 0)).is_err());
    }

    #[test]
    fn real_root_isolation() {
        let p: IntPolynomial = "x^4-104*x^3-1152*x^2+5376*x+55296".parse().unwrap();
        let r = real_roots(&p).unwrap();
        assert_eq!(r.len(), 4);
        for (x, e) in &r {
            assert!(e.is_finite());
            assert!(p.eval_f64(*x).abs() < 1e-3 * p.eval_f64(*x + 1.0).abs().max(1.0));
        }
        let q: IntPolynomial = "x^2+1".parse().unwrap();
        assert!(matches!(real_roots(&q), Err(Error::NonRealRoots)));
    }

    #[test]
    fn identity_by_evaluation() {
        let sq = |x: i64| BigInt::from(x * x);
        assert!(poly_identity_check(sq, sq, 2).is_ok());
        assert_eq!(poly_identity_check(sq, |x| BigInt::from(x * x + i64::from(x == 3)), 2), Err(3));
    }
}
