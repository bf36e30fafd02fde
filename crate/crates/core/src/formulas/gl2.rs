//! Closed forms for `Γ(GL(2,q))`.

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::graph::{noncommuting_graph, Graph};
use crate::group::make_gl2;
use crate::modular;
use crate::poly::IntPolynomial;
use crate::report::VerificationReport;
use crate::roots::{solve_cubic, CubicCoefficients};
use crate::spectra::{eigenvalues_numeric, EnergyValue};

/// Seed for the verification primes, fixed so reports are reproducible.
pub const PRIME_SEED: u64 = 0x6e63_6770;

/// Every quantity the characteristic-polynomial formula depends on.
#[derive(Clone, Debug, PartialEq)]
pub struct Gl2FormulaBundle {
    pub q: u32,
    /// `q² + q + 1`
    pub t: usize,
    /// `(q²−1)(q²−q) − (q−1)`
    pub vertex_count: usize,
    pub cubic: CubicCoefficients,
    /// `(r, e)`: factor `(x + r)^e`.
    pub linear: [(i64, usize); 3],
    /// `n − t`
    pub zero_multiplicity: usize,
}

impl Gl2FormulaBundle {
    pub fn new(q: u32) -> Result<Self> {
        if q < 3 || prime_power(q).is_none() {
            return Err(Error::InvalidArgument(format!("GL(2,q) formulas need a prime power q >= 3, got {q}")));
        }
        let qi = q as i64;
        let b = -qi.pow(4) + qi.pow(3) + 4 * qi * qi - 6 * qi + 2;
        let c = -2 * qi.pow(6) + 6 * qi.pow(5) - qi.pow(4) - 13 * qi.pow(3) + 15 * qi * qi - 5 * qi;
        let d = -(qi - 1).pow(4) * qi * qi * (qi - 2) * (qi + 1);
        let qs = q as usize;
        let t = qs * qs + qs + 1;
        let vertex_count = (qs * qs - 1) * (qs * qs - qs) - (qs - 1);
        let linear = [
            ((qi - 1) * (qi - 1), qs),
            (qi * (qi - 1), (qs * qs - qs - 2) / 2),
            ((qi - 1) * (qi - 2), (qs * qs + qs - 2) / 2),
        ];
        Ok(Gl2FormulaBundle {
            q,
            t,
            vertex_count,
            cubic: CubicCoefficients::new(b, c, d),
            linear,
            zero_multiplicity: vertex_count - t,
        })
    }

    /// `q + (q²−q−2)/2 + (q²+q−2)/2 + (n−t) + 3 = n`.
    pub fn exponent_identity_holds(&self) -> bool {
        self.linear.iter().map(|l| l.1).sum::<usize>() + self.zero_multiplicity + 3 == self.vertex_count
    }

    /// Factors `(polynomial, exponent)`; monic.
    pub fn factors(&self) -> Vec<(IntPolynomial, usize)> {
        let mut out = vec![(IntPolynomial::x(), self.zero_multiplicity), (self.cubic.to_poly(), 1)];
        out.extend(self.linear.iter().map(|&(r, e)| (IntPolynomial::linear_root(-r), e)));
        out
    }

    /// Energy contributed by the three linear factors.
    pub fn linear_part(&self) -> i64 {
        self.linear.iter().map(|&(r, e)| r * e as i64).sum()
    }
}

pub fn gl2_charpoly(q: u32) -> Result<IntPolynomial> {
    let b = Gl2FormulaBundle::new(q)?;
    Ok(b.factors().iter().fold(IntPolynomial::one(), |acc, (f, e)| &acc * &f.pow(*e)))
}

/// The closed form reduced mod `p`, built directly in `ℤ/p`.
pub fn gl2_charpoly_mod(q: u32, p: u64) -> Result<Vec<u64>> {
    let b = Gl2FormulaBundle::new(q)?;
    let mut acc = vec![1u64];
    for (f, e) in b.factors() {
        acc = modular::poly_mul(&acc, &modular::poly_pow(&f.reduce_mod(p), e, p), p);
    }
    Ok(acc)
}

/// `|γ₁|+|γ₂|+|γ₃|` plus the exact linear contributions.
pub fn gl2_energy(q: u32) -> Result<EnergyValue> {
    let b = Gl2FormulaBundle::new(q)?;
    let roots = solve_cubic(&b.cubic)?;
    let cubic: f64 = roots.iter().map(|g| g.abs()).sum();
    let total = cubic + b.linear_part() as f64;
    Ok(EnergyValue::numeric_only(total, 1e-12 * total.max(1.0)))
}

pub fn gl2_graph(q: u32) -> Result<Graph> {
    Ok(noncommuting_graph(&make_gl2(q, None)?))
}

/// Exact comparison when `exact`, otherwise agreement modulo `primes`
/// random 60-bit primes.
pub fn verify_gl2_charpoly(q: u32, exact: bool, primes: usize) -> Result<VerificationReport> {
    let bundle = Gl2FormulaBundle::new(q)?;
    let g = gl2_graph(q)?;
    let a = g.adjacency();
    let mut r = VerificationReport::new("gl2-charpoly").param("q", q);
    r.expect_eq("vertex count", &g.vertex_count(), &bundle.vertex_count);
    r.expect("exponent identity", bundle.exponent_identity_holds());
    let parts = g.is_complete_multipartite().map(|p| p.len());
    r.expect_same("number of parts (t)", &parts, &Some(bundle.t));
    if exact {
        let brute = charpoly(&a)?;
        let formula = gl2_charpoly(q)?;
        r = r.param("mode", "exact").sides(&brute, &formula);
        r.expect_eq("characteristic polynomial", &brute, &formula);
    } else {
        if primes == 0 {
            return Err(Error::InvalidArgument("at least one prime is required".into()));
        }
        let mut rng = StdRng::seed_from_u64(PRIME_SEED);
        let ps = modular::random_primes(primes, &mut rng);
        r = r.param("mode", format!("mod {primes} primes"));
        for &p in &ps {
            let brute = modular::trim(modular::charpoly_mod(&a, p));
            let formula = gl2_charpoly_mod(q, p)?;
            if brute != formula {
                r.fail(format!("mismatch modulo {p}"));
            }
        }
        let text = format!("x^{} (x^3 {:+}x^2 {:+}x {:+}) · linear factors", bundle.zero_multiplicity, bundle.cubic.b, bundle.cubic.c, bundle.cubic.d);
        r = r.sides(format!("agrees modulo {:?}", ps), text);
    }
    Ok(r)
}

pub fn verify_gl2_energy(q: u32) -> Result<VerificationReport> {
    let formula = gl2_energy(q)?;
    let g = gl2_graph(q)?;
    let eig = eigenvalues_numeric(&g.adjacency().to_f64(), 1e-12)?;
    let numeric: f64 = eig.iter().map(|v| v.abs()).sum();
    let mut r = VerificationReport::new("gl2-energy").param("q", q).sides(numeric, &formula);
    r.expect_close("energy", numeric, formula.numeric, 1e-8);
    r.expect_close("energy = 2λ₁", numeric, 2.0 * eig[0], 1e-8);
    Ok(r)
}

/// Exact integer coefficients of the closed form, for display.
pub fn cubic_text(q: u32) -> Result<String> {
    Ok(Gl2FormulaBundle::new(q)?.cubic.to_poly().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundle_q3() {
        let b = Gl2FormulaBundle::new(3).unwrap();
        assert_eq!(b.cubic, CubicCoefficients::new(-34, -312, -576));
        assert_eq!(b.linear, [(4, 3), (6, 2), (2, 5)]);
        assert_eq!((b.vertex_count, b.t, b.zero_multiplicity), (46, 13, 33));
        assert_eq!(b.linear_part(), 34);
        assert!(b.exponent_identity_holds());
    }

    #[test]
    fn bundle_q4_and_q5() {
        let b = Gl2FormulaBundle::new(4).unwrap();
        assert_eq!((b.vertex_count, b.t, b.zero_multiplicity), (177, 21, 156));
        assert_eq!(b.linear, [(9, 4), (12, 5), (6, 9)]);
        let b = Gl2FormulaBundle::new(5).unwrap();
        assert_eq!(b.linear_part(), 428);
        for q in [3, 4, 5, 7, 8, 9] {
            assert!(Gl2FormulaBundle::new(q).unwrap().exponent_identity_holds());
        }
        assert!(Gl2FormulaBundle::new(2).is_err());
        assert!(Gl2FormulaBundle::new(6).is_err());
    }

    #[test]
    fn q3_checks() {
        assert!(verify_gl2_charpoly(3, true, 0).unwrap().passed());
        assert!(verify_gl2_charpoly(3, false, 3).unwrap().passed());
        assert!(verify_gl2_energy(3).unwrap().passed());
    }
}
