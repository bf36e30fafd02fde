//! Direct products: scaling by an abelian factor, `D₈ × D₈`, and
//! `D₂ₙ × D₂ₙ` deflation.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::graph::noncommuting_graph;
use crate::group::{direct_product, make_dihedral, FiniteGroup};
use crate::modular::{self, Crt};
use crate::poly::IntPolynomial;
use crate::report::VerificationReport;
use crate::spectra::{assemble, assemble_exact_spectrum, eigenvalues_numeric, EnergyValue};
use crate::surd::SurdSum;
use crate::DEFAULT_CAP;

use super::gl2::PRIME_SEED;

/// For abelian `H` of order `m`: the non-zero spectrum of `Γ(G×H)` is `m`
/// times that of `Γ(G)`, every other eigenvalue is zero, `E` scales by
/// `m`, and `P_{G×H}(x) = x^{(m−1)N} · m^N P_G(x/m)` with `N = |V(Γ(G))|`.
pub fn product_scaling_check(g: Arc<FiniteGroup>, h: Arc<FiniteGroup>, cap: usize) -> Result<VerificationReport> {
    if !h.is_abelian() {
        return Err(Error::InvalidArgument(format!("{} is not abelian", h.label())));
    }
    if g.is_abelian() {
        return Err(Error::InvalidArgument(format!("{} is abelian", g.label())));
    }
    let m = h.order() as i64;
    let gh = direct_product(g.clone(), h.clone(), cap)?;
    let base = noncommuting_graph(&g);
    let prod = noncommuting_graph(&gh);
    let pg = charpoly(&base.adjacency())?;
    let pgh = charpoly(&prod.adjacency())?;
    let sg = assemble_exact_spectrum(&pg)?;
    let sgh = assemble_exact_spectrum(&pgh)?;

    let mut r = VerificationReport::new("product-scaling").param("G", g.label()).param("H", h.label());
    r = r.sides(sgh.nonzero(), sg.nonzero().scaled(m));
    r.expect_eq("non-zero spectrum", &sgh.nonzero().to_string(), &sg.nonzero().scaled(m).to_string());
    let n = base.vertex_count();
    r.expect_eq("vertex count", &prod.vertex_count(), &(n * m as usize));
    let zeros_extra = sgh.total_multiplicity() - sgh.nonzero().total_multiplicity();
    let zeros_base = sg.total_multiplicity() - sg.nonzero().total_multiplicity();
    r.expect_eq("zero multiplicity", &zeros_extra, &(zeros_base + (m as usize - 1) * n));
    let scaled = &IntPolynomial::monomial((m as usize - 1) * n) * &pg.scale_roots(&BigInt::from(m));
    r.expect_eq("scaled characteristic polynomial", &pgh, &scaled);

    let eg = numeric_energy(&base.adjacency())?;
    let egh = numeric_energy(&prod.adjacency())?;
    r.expect_close("energy ratio", egh / eg, m as f64, 1e-8);
    Ok(r)
}

fn numeric_energy(a: &crate::matrix::IntMatrix) -> Result<f64> {
    Ok(eigenvalues_numeric(&a.to_f64(), 1e-12)?.iter().map(|v| v.abs()).sum())
}

/// The stated factorization of `P(Γ(D₈ × D₈))`, in `det(A − xI)` form.
pub const D8XD8_FACTORED: &str = "(-x)^45 (-x+8) (-x-4)^4 (x^2+8x-32)^4 (x^2-40x-128)";

/// [`D8XD8_FACTORED`], sign-normalized.
pub fn d8xd8_closed_form() -> IntPolynomial {
    D8XD8_FACTORED.parse::<IntPolynomial>().expect("static polynomial").sign_normalized()
}

pub fn d8xd8_energy() -> EnergyValue {
    EnergyValue::from_surd("8*(3+sqrt(33)+4*sqrt(3))".parse::<SurdSum>().expect("static surd"))
}

pub fn d8xd8_check() -> Result<VerificationReport> {
    let d8 = Arc::new(make_dihedral(4)?);
    let gg = direct_product(d8.clone(), d8, DEFAULT_CAP)?;
    let graph = noncommuting_graph(&gg);
    let brute = charpoly(&graph.adjacency())?;
    let want = d8xd8_closed_form();
    let mut r = VerificationReport::new("d8xd8").sides(&brute, D8XD8_FACTORED);
    r.expect_eq("vertex count", &graph.vertex_count(), &60);
    r.expect_eq("characteristic polynomial", &brute, &want);
    let spec = assemble(&brute)?.spectrum;
    r.expect_eq("multiplicity of -4", &spec.multiplicity_of(&crate::roots::ExactRoot::integer(-4)), &4);
    let e = spec.energy();
    let formula = d8xd8_energy();
    r.expect_same("exact energy", &e.exact, &formula.exact);
    r.expect_close("numeric energy", numeric_energy(&graph.adjacency())?, formula.numeric, 1e-8);
    Ok(r)
}

/// Factors stated for `Γ(D₂ₙ × D₂ₙ)`, `n` even: `x^{15n²/4−2n−7}`,
/// `(x+4)^{n²/4−n+1}` and `(x³+(2n+4)x²−16n(n−2))^{n−2}`.
pub fn d2n_squared_factors(n: usize) -> Result<Vec<(IntPolynomial, usize)>> {
    if n % 2 == 1 || n <= 4 {
        return Err(Error::InvalidArgument(format!("D2n x D2n needs an even n > 4, got {n}")));
    }
    let m = n as i64;
    let cubic = IntPolynomial::from_i64(&[-16 * m * (m - 2), 0, 2 * m + 4, 1]);
    Ok(vec![
        (IntPolynomial::x(), 15 * n * n / 4 - 2 * n - 7),
        (IntPolynomial::linear_root(-4), n * n / 4 - n + 1),
        (cubic, n - 2),
    ])
}

/// The remaining factor for `n = 6`, as published.
pub fn d12xd12_quotient() -> IntPolynomial {
    "(x+24)(x^3-384x+2304)(x^4-104x^3-1152x^2+5376x+55296)".parse().expect("static polynomial")
}

/// Deflates the stated factors from the brute-force characteristic
/// polynomial and reports the degree-8 quotient `f`. Exact for
/// `exact = true`; otherwise each of `primes` random primes is deflated
/// separately and `f` is lifted by CRT when the moduli exceed its
/// coefficient bound.
pub fn d2n_squared_check(n: usize, exact: bool, primes: usize, cap: usize) -> Result<VerificationReport> {
    let factors = d2n_squared_factors(n)?;
    let d = Arc::new(make_dihedral(n)?);
    let gg = direct_product(d.clone(), d, cap)?;
    let graph = noncommuting_graph(&gg);
    let a = graph.adjacency();
    let mut r = VerificationReport::new("d2n-squared").param("n", n);
    if exact {
        r = r.param("mode", "exact");
        let brute = charpoly(&a)?;
        let mut f = brute.clone();
        for (fac, e) in &factors {
            match f.deflate(fac, *e) {
                Ok(q) => f = q,
                Err(err) => {
                    r.fail(format!("({fac})^{e} does not divide: {err}"));
                    return Ok(r);
                }
            }
        }
        r.expect_same("deg f", &f.degree(), &Some(8));
        if n == 6 {
            r.expect_eq("f", &f, &d12xd12_quotient());
        }
        let simple = f.squarefree_decomposition().iter().all(|(_, k)| *k == 1);
        r.note(format!("f has {} roots", if simple { "simple" } else { "repeated" }));
        r = r.sides(format!("f(x) = {f}"), format!("{} · f(x)", factor_text(&factors)));
    } else {
        if primes == 0 {
            return Err(Error::InvalidArgument("at least one prime is required".into()));
        }
        let mut rng = StdRng::seed_from_u64(PRIME_SEED ^ n as u64);
        let ps = modular::random_primes(primes, &mut rng);
        r = r.param("mode", format!("mod {primes} primes"));
        let mut crt = Crt::new(9);
        for &p in &ps {
            let mut cur = modular::trim(modular::charpoly_mod(&a, p));
            for (fac, e) in &factors {
                match modular::deflate_mod(&cur, &fac.reduce_mod(p), *e, p) {
                    Ok(q) => cur = q,
                    Err(_) => {
                        r.fail(format!("({fac})^{e} does not divide modulo {p}"));
                        return Ok(r);
                    }
                }
            }
            if cur.len() != 9 {
                r.fail(format!("deg f = {} modulo {p}", cur.len().saturating_sub(1)));
                return Ok(r);
            }
            crt.add(&cur, p);
        }
        // every eigenvalue is at most the maximum degree Δ, so the
        // coefficient of x^{8−k} in f is at most C(8,k)·Δ^k
        let delta = BigInt::from(graph.degrees().into_iter().max().unwrap_or(0));
        let bound = (0..=8u32).map(|k| binomial(8, k) * delta.pow(k)).max().unwrap();
        if crt.modulus() > &(bound * 2) {
            let f = IntPolynomial::new(crt.balanced());
            r.note(format!("f lifted exactly from {} primes", ps.len()));
            r = r.sides(format!("f(x) = {f}"), format!("{} · f(x)", factor_text(&factors)));
        } else {
            r = r.sides(format!("deflation succeeded modulo {ps:?}"), factor_text(&factors));
        }
    }
    Ok(r)
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn factor_text(factors: &[(IntPolynomial, usize)]) -> String {
    factors.iter().map(|(f, e)| format!("({f})^{e}")).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, GroupSpec};

    fn grp(s: &str) -> Arc<FiniteGroup> {
        s.parse::<GroupSpec>().unwrap().build(DEFAULT_CAP).unwrap()
    }

    #[test]
    fn scaling() {
        let r = product_scaling_check(grp("dihedral:3"), grp("cyclic:2"), DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r}");
        let r = product_scaling_check(grp("dihedral:4"), Arc::new(make_cyclic(1).unwrap()), DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r}");
        assert!(product_scaling_check(grp("dihedral:4"), grp("dihedral:3"), DEFAULT_CAP).is_err());
    }

    #[test]
    fn d8_squared() {
        let r = d8xd8_check().unwrap();
        assert!(r.passed(), "{r}");
        assert!((d8xd8_energy().numeric - 125.382_127_014_508_46).abs() < 1e-9);
    }

    #[test]
    fn factor_exponents() {
        let f = d2n_squared_factors(6).unwrap();
        assert_eq!(f[0].1, 116);
        assert_eq!(f[1].1, 4);
        assert_eq!(f[2], ("x^3+16x^2-384".parse().unwrap(), 4));
        assert_eq!(d2n_squared_factors(8).unwrap()[0].1, 217);
        assert!(d2n_squared_factors(4).is_err());
        assert_eq!(binomial(8, 4), BigInt::from(70));
    }
}
