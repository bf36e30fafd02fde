//! Spectra, graph energy and Laplacian energy.
//!
//! Exact spectra come from the characteristic polynomial: squarefree
//! decomposition gives multiplicities, integer and quadratic factors are
//! split off by exact division, and whatever remains is reported as
//! numeric roots with error bounds. A cyclic Jacobi solver provides the
//! independent numeric route.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{IntMatrix, Matrix};
use crate::poly::IntPolynomial;
use crate::roots::{real_roots, solve_quadratic, surd_sign, ExactRoot};
use crate::surd::SurdSum;

/// Graphs up to this many vertices get an exact spectrum by default.
pub const EXACT_SPECTRUM_LIMIT: usize = 200;

/// Numeric eigenvalues closer than this are grouped into one multiplicity.
pub const MULTIPLICITY_GAP: f64 = 1e-6;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, in
/// non-increasing order. Iterates until the off-diagonal Frobenius norm
/// drops below `min(tol, 1e-12·‖A‖_F)`.
pub fn eigenvalues_numeric(m: &Matrix<f64>, tol: f64) -> Result<Vec<f64>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if let Some((row, col)) = m.asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let n = m.dim();
    let mut a: Vec<f64> = m.as_slice().to_vec();
    let norm = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let target = tol.min(1e-12 * norm);
    let off = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Internal(format!("Jacobi did not converge in {MAX_SWEEPS} sweeps")));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub root: ExactRoot,
    pub multiplicity: usize,
}

/// Eigenvalues with multiplicities, sorted by decreasing value.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

/// JSON row: exact values are strings, numeric values are floats.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntryJson {
    pub kind: String,
    pub value: serde_json::Value,
    pub multiplicity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<f64>,
}

impl Spectrum {
    /// Builds a spectrum, merging equal roots and sorting.
    pub fn new(entries: impl IntoIterator<Item = (ExactRoot, usize)>) -> Self {
        let mut out: Vec<SpectrumEntry> = Vec::new();
        for (root, multiplicity) in entries {
            if multiplicity == 0 {
                continue;
            }
            match out.iter_mut().find(|e| e.root.is_exact() && root.is_exact() && e.root.cmp_value(&root) == Ordering::Equal) {
                Some(e) => e.multiplicity += multiplicity,
                None => out.push(SpectrumEntry { root, multiplicity }),
            }
        }
        out.sort_by(|x, y| y.root.cmp_value(&x.root));
        Spectrum { entries: out }
    }

    /// Groups sorted numeric eigenvalues, snapping values within `1e-9`
    /// of an integer to that integer.
    pub fn from_numeric(values: &[f64], error: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(|x, y| y.total_cmp(x));
        let mut groups: Vec<(f64, usize)> = Vec::new();
        for v in sorted {
            match groups.last_mut() {
                Some((first, count)) if (*first - v).abs() <= MULTIPLICITY_GAP => *count += 1,
                _ => groups.push((v, 1)),
            }
        }
        Spectrum::new(groups.into_iter().map(|(v, k)| {
            let r = v.round();
            let root = if (v - r).abs() <= 1e-9 && r.abs() < 9e15 {
                ExactRoot::integer(r as i64)
            } else {
                ExactRoot::NumericOnly { value: v, error }
            };
            (root, k)
        }))
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(|e| e.root.is_exact())
    }

    pub fn multiplicity_of(&self, root: &ExactRoot) -> usize {
        self.entries.iter().find(|e| e.root.cmp_value(root) == Ordering::Equal).map_or(0, |e| e.multiplicity)
    }

    /// Entries with non-zero eigenvalue.
    pub fn nonzero(&self) -> Spectrum {
        Spectrum { entries: self.entries.iter().filter(|e| !e.root.is_zero()).cloned().collect() }
    }

    /// Every eigenvalue multiplied by `k`.
    pub fn scaled(&self, k: i64) -> Spectrum {
        Spectrum::new(self.entries.iter().map(|e| (e.root.scaled(k), e.multiplicity)))
    }

    /// All eigenvalues, repeated by multiplicity, non-increasing.
    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().flat_map(|e| std::iter::repeat(e.root.value()).take(e.multiplicity)).collect()
    }

    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|e| e.root.value() * e.multiplicity as f64).sum()
    }

    /// `Σ |λ|`, exact when every root is.
    pub fn energy(&self) -> EnergyValue {
        self.absolute_deviation(&BigRational::zero())
    }

    /// `Σ |λ − c|` over the spectrum.
    pub fn absolute_deviation(&self, center: &BigRational) -> EnergyValue {
        let c = center.to_f64().unwrap_or(f64::NAN);
        let mut numeric = 0.0;
        let mut error = 0.0;
        let mut exact = Some(SurdSum::zero());
        let shift = SurdSum::rational(-center.clone());
        for e in &self.entries {
            let k = e.multiplicity as f64;
            numeric += k * (e.root.value() - c).abs();
            if let ExactRoot::NumericOnly { error: err, .. } = e.root {
                error += k * err;
            }
            let term = e.root.to_surd().and_then(|mut s| {
                s.add_assign(&shift);
                let sign = surd_sign(&s)?;
                let factor = if sign == Ordering::Less { -(e.multiplicity as i64) } else { e.multiplicity as i64 };
                Some(s.scaled(&BigRational::from_integer(factor.into())))
            });
            exact = match (exact, term) {
                (Some(mut acc), Some(t)) => {
                    acc.add_assign(&t);
                    Some(acc)
                }
                _ => None,
            };
        }
        if let Some(x) = &exact {
            numeric = x.to_f64();
            error = 4.0 * f64::EPSILON * numeric.abs().max(1.0);
        } else {
            error += 4.0 * f64::EPSILON * numeric.abs().max(1.0) * self.entries.len().max(1) as f64;
        }
        EnergyValue { exact, numeric, error_bound: error }
    }

    pub fn to_json(&self) -> Vec<SpectrumEntryJson> {
        self.entries
            .iter()
            .map(|e| {
                let (kind, value, error) = match &e.root {
                    ExactRoot::Integer { .. } => ("integer", serde_json::Value::String(e.root.to_string()), None),
                    ExactRoot::QuadraticSurd { .. } => ("quadratic_surd", serde_json::Value::String(e.root.to_string()), None),
                    ExactRoot::NumericOnly { value, error } => ("numeric_only", serde_json::json!(value), Some(*error)),
                };
                SpectrumEntryJson { kind: kind.into(), value, multiplicity: e.multiplicity, error }
            })
            .collect()
    }

    pub fn from_json(rows: &[SpectrumEntryJson]) -> Result<Spectrum> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let root = match (&row.value, row.kind.as_str()) {
                (serde_json::Value::String(s), "integer" | "quadratic_surd") => root_from_surd(&s.parse()?)?,
                (serde_json::Value::Number(v), "numeric_only") => ExactRoot::NumericOnly {
                    value: v.as_f64().unwrap_or(f64::NAN),
                    error: row.error.unwrap_or(0.0),
                },
                _ => return Err(Error::InvalidArgument(format!("malformed spectrum row of kind `{}`", row.kind))),
            };
            out.push((root, row.multiplicity));
        }
        Ok(Spectrum::new(out))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| format!("({})^{}", e.root, e.multiplicity)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Converts `r + c·√d` with half-integer `r`, `c` into an exact root.
pub fn root_from_surd(s: &SurdSum) -> Result<ExactRoot> {
    let twice = |q: &BigRational| -> Result<i64> {
        let t = q * BigRational::from_integer(2.into());
        if !t.is_integer() {
            return Err(Error::InvalidArgument(format!("{s} is not a quadratic integer")));
        }
        t.to_integer().to_i64().ok_or_else(|| Error::InvalidArgument(format!("{s} exceeds 64-bit range")))
    };
    let a = twice(s.rational_part())?;
    match s.radicals().iter().collect::<Vec<_>>().as_slice() {
        [] if a % 2 == 0 => Ok(ExactRoot::integer(a / 2)),
        [(d, c)] => Ok(ExactRoot::QuadraticSurd { a, b: twice(c)?, d: **d as i64 }),
        _ => Err(Error::InvalidArgument(format!("{s} is not a single quadratic surd"))),
    }
}

/// Energy with an exact symbolic form when available.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyValue {
    pub exact: Option<SurdSum>,
    pub numeric: f64,
    pub error_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnergyJson {
    pub exact: Option<String>,
    pub numeric: f64,
    pub error_bound: f64,
}

impl EnergyValue {
    pub fn zero() -> Self {
        EnergyValue { exact: Some(SurdSum::zero()), numeric: 0.0, error_bound: 0.0 }
    }

    pub fn numeric_only(numeric: f64, error_bound: f64) -> Self {
        EnergyValue { exact: None, numeric, error_bound }
    }

    pub fn from_surd(s: SurdSum) -> Self {
        let numeric = s.to_f64();
        EnergyValue { exact: Some(s), numeric, error_bound: 4.0 * f64::EPSILON * numeric.abs().max(1.0) }
    }

    pub fn exact_rational(&self) -> Option<&BigRational> {
        self.exact.as_ref().and_then(|s| s.as_rational())
    }

    pub fn to_json(&self) -> EnergyJson {
        EnergyJson { exact: self.exact.as_ref().map(|s| s.to_string()), numeric: self.numeric, error_bound: self.error_bound }
    }
}

impl fmt::Display for EnergyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(s) if s.is_rational() => write!(f, "{s}"),
            Some(s) => write!(f, "{s} ≈ {:.12}", self.numeric),
            None => write!(f, "{:.12} (±{:.1e})", self.numeric, self.error_bound),
        }
    }
}

/// Exact spectrum of a polynomial together with its factor list.
#[derive(Clone, Debug, PartialEq)]
pub struct Assembly {
    pub spectrum: Spectrum,
    /// Factors found (`x`, linear, quadratic, or leftover) with multiplicity.
    pub factors: Vec<(IntPolynomial, usize)>,
}

/// Splits a monic polynomial with only real roots into its spectrum.
pub fn assemble_exact_spectrum(poly: &IntPolynomial) -> Result<Spectrum> {
    Ok(assemble(poly)?.spectrum)
}

pub fn assemble(poly: &IntPolynomial) -> Result<Assembly> {
    let poly = poly.clone().sign_normalized();
    if poly.is_zero() || !poly.is_monic() {
        return Err(Error::InvalidArgument(format!("spectrum assembly needs a monic polynomial, got {poly}")));
    }
    let mut spectrum: Vec<(ExactRoot, usize)> = Vec::new();
    let mut factors: Vec<(IntPolynomial, usize)> = Vec::new();

    let zeros = poly.zero_root_multiplicity();
    let rest = poly.exact_div(&IntPolynomial::monomial(zeros))?;
    if zeros > 0 {
        spectrum.push((ExactRoot::integer(0), zeros));
        factors.push((IntPolynomial::x(), zeros));
    }
    if rest.degree() == Some(0) {
        return Ok(Assembly { spectrum: Spectrum::new(spectrum), factors });
    }
    for (part, mult) in rest.squarefree_decomposition() {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        let (found, leftover) = split_squarefree(&part)?;
        for (f, roots) in found {
            for r in roots {
                spectrum.push((r, mult));
            }
            factors.push((f, mult));
        }
        if let Some(left) = leftover {
            for (value, error) in real_roots(&left)? {
                spectrum.push((ExactRoot::NumericOnly { value, error }, mult));
            }
            factors.push((left, mult));
        }
    }
    Ok(Assembly { spectrum: Spectrum::new(spectrum), factors })
}

type Split = (Vec<(IntPolynomial, Vec<ExactRoot>)>, Option<IntPolynomial>);

/// Peels integer roots, then quadratic factors whose root pairs round to
/// integer sums and products, off a squarefree polynomial.
fn split_squarefree(part: &IntPolynomial) -> Result<Split> {
    let mut found = Vec::new();
    let mut rest = part.clone();

    for (x, _) in real_roots(&rest)? {
        let r = x.round();
        if r.abs() > 9e15 {
            continue;
        }
        for cand in [r as i64, r as i64 - 1, r as i64 + 1] {
            let lin = IntPolynomial::linear_root(cand);
            if rest.eval(&BigInt::from(cand)).is_zero() {
                rest = rest.exact_div(&lin)?;
                found.push((lin, vec![ExactRoot::integer(cand)]));
                break;
            }
        }
    }

    let mut pending: Vec<f64> = if rest.degree().unwrap_or(0) > 0 { real_roots(&rest)?.into_iter().map(|r| r.0).collect() } else { vec![] };
    let mut i = 0;
    while i < pending.len() {
        let mut matched = None;
        for j in i + 1..pending.len() {
            let (s, p) = (pending[i] + pending[j], pending[i] * pending[j]);
            let (sr, pr) = (s.round(), p.round());
            let scale = 1e-6 * (1.0 + s.abs() + p.abs());
            if (s - sr).abs() > scale || (p - pr).abs() > scale || pr.abs() > 9e15 {
                continue;
            }
            let quad = IntPolynomial::from_i64(&[pr as i64, -(sr as i64), 1]);
            if let Ok((q, r)) = rest.div_rem(&quad) {
                if r.is_zero() {
                    if let Ok(roots) = solve_quadratic(-(sr as i64), pr as i64) {
                        rest = q;
                        found.push((quad, roots.to_vec()));
                        matched = Some(j);
                        break;
                    }
                }
            }
        }
        match matched {
            Some(j) => {
                pending.remove(j);
                pending.remove(i);
            }
            None => i += 1,
        }
    }
    let leftover = (rest.degree().unwrap_or(0) > 0).then_some(rest);
    Ok((found, leftover))
}

/// How [`energy_with`] and [`laplacian_energy_with`] obtain eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Exact up to [`EXACT_SPECTRUM_LIMIT`] vertices, numeric above.
    #[default]
    Auto,
    Exact,
    Numeric,
}

fn use_exact(n: usize, method: Method) -> bool {
    match method {
        Method::Auto => n <= EXACT_SPECTRUM_LIMIT,
        Method::Exact => true,
        Method::Numeric => false,
    }
}

pub fn adjacency_spectrum(graph: &Graph, method: Method) -> Result<Spectrum> {
    matrix_spectrum(&graph.adjacency(), method, NUMERIC_TOLERANCE)
}

pub fn laplacian_spectrum(graph: &Graph, method: Method) -> Result<Spectrum> {
    matrix_spectrum(&graph.laplacian(), method, NUMERIC_TOLERANCE)
}

/// Default Jacobi tolerance for the numeric path.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

/// Spectrum of a symmetric integer matrix; `tol` applies to the numeric path.
pub fn matrix_spectrum(m: &IntMatrix, method: Method, tol: f64) -> Result<Spectrum> {
    if m.dim() == 0 {
        return Ok(Spectrum::default());
    }
    if use_exact(m.dim(), method) {
        assemble_exact_spectrum(&charpoly(m)?)
    } else {
        Ok(Spectrum::from_numeric(&eigenvalues_numeric(&m.to_f64(), tol)?, tol))
    }
}

pub fn energy(graph: &Graph) -> Result<EnergyValue> {
    energy_with(graph, Method::Auto)
}

pub fn energy_with(graph: &Graph, method: Method) -> Result<EnergyValue> {
    if graph.is_null() {
        return Ok(EnergyValue::zero());
    }
    Ok(adjacency_spectrum(graph, method)?.energy())
}

/// `LE = Σ |μᵢ − 2m/N|` over the Laplacian spectrum, `N` the vertex count.
pub fn laplacian_energy(graph: &Graph) -> Result<EnergyValue> {
    laplacian_energy_with(graph, Method::Auto)
}

pub fn laplacian_energy_with(graph: &Graph, method: Method) -> Result<EnergyValue> {
    if graph.is_null() {
        return Ok(EnergyValue::zero());
    }
    let mean = BigRational::new(BigInt::from(2 * graph.edge_count()), BigInt::from(graph.vertex_count()));
    Ok(laplacian_spectrum(graph, method)?.absolute_deviation(&mean))
}

/// Sum of `|λ|` over numeric eigenvalues.
pub fn numeric_energy(values: &[f64]) -> f64 {
    values.iter().map(|v| v.abs()).sum()
}

/// `true` when `|a − b| ≤ tol`, counting NaN as a mismatch.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

impl SpectrumEntry {
    pub fn abs_value(&self) -> f64 {
        self.root.value().abs()
    }
}

/// Largest absolute row sum bounds every eigenvalue; used as a sanity check.
pub fn spectral_bound(m: &IntMatrix) -> i64 {
    crate::matrix::max_abs_row_sum(m)
}

impl From<&SpectrumEntry> for (ExactRoot, usize) {
    fn from(e: &SpectrumEntry) -> Self {
        (e.root.clone(), e.multiplicity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::noncommuting_graph;
    use crate::group::make_dihedral;

    fn dihedral_graph(n: usize) -> Graph {
        noncommuting_graph(&make_dihedral(n).unwrap())
    }

    fn surd(a: i64, b: i64, d: i64) -> ExactRoot {
        ExactRoot::QuadraticSurd { a, b, d }
    }

    #[test]
    fn jacobi_small() {
        let eig = eigenvalues_numeric(&dihedral_graph(4).adjacency().to_f64(), 1e-12).unwrap();
        let want = [4.0, 0.0, 0.0, 0.0, -2.0, -2.0];
        for (g, w) in eig.iter().zip(want) {
            assert!((g - w).abs() < 1e-10, "{eig:?}");
        }
        let id = eigenvalues_numeric(&IntMatrix::identity(3).to_f64(), 1e-12).unwrap();
        assert_eq!(id, vec![1.0; 3]);
        let asym = IntMatrix::from_rows(vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert!(eigenvalues_numeric(&asym.to_f64(), 1e-12).is_err());
    }

    #[test]
    fn d16_contains_surds() {
        let eig = eigenvalues_numeric(&dihedral_graph(8).adjacency().to_f64(), 1e-12).unwrap();
        let r = 57f64.sqrt();
        assert!(eig.iter().any(|v| (v - (3.0 + r)).abs() < 1e-9));
        assert!(eig.iter().any(|v| (v - (3.0 - r)).abs() < 1e-9));
    }

    #[test]
    fn d12_exact_spectrum() {
        let s = adjacency_spectrum(&dihedral_graph(6), Method::Exact).unwrap();
        let want = Spectrum::new([(surd(4, 4, 7), 1), (ExactRoot::integer(0), 6), (ExactRoot::integer(-2), 2), (surd(4, -4, 7), 1)]);
        assert_eq!(s, want);
        assert_eq!(s.entries()[0].root, surd(4, 4, 7));
    }

    #[test]
    fn pure_power() {
        let s = assemble_exact_spectrum(&IntPolynomial::monomial(3)).unwrap();
        assert_eq!(s.entries(), &[SpectrumEntry { root: ExactRoot::integer(0), multiplicity: 3 }]);
    }

    #[test]
    fn cubic_leftover_is_numeric() {
        let p: IntPolynomial = "x^2*(x+2)^3*(x^3-34*x^2-312*x-576)".parse().unwrap();
        let a = assemble(&p).unwrap();
        assert_eq!(a.spectrum.total_multiplicity(), 8);
        assert_eq!(a.spectrum.entries().iter().filter(|e| !e.root.is_exact()).count(), 3);
        assert!(a.factors.iter().any(|(f, m)| f.degree() == Some(3) && *m == 1));
    }

    #[test]
    fn energies() {
        let e = energy(&dihedral_graph(5)).unwrap();
        assert_eq!(e.exact.unwrap(), "4+4*sqrt(6)".parse().unwrap());
        let le = laplacian_energy(&dihedral_graph(6)).unwrap();
        assert_eq!(le.exact_rational().unwrap(), &BigRational::new(108.into(), 5.into()));
        let le = laplacian_energy(&dihedral_graph(5)).unwrap();
        assert_eq!(le.exact_rational().unwrap(), &BigRational::new(70.into(), 3.into()));
        assert_eq!(energy(&Graph::empty(0)).unwrap(), EnergyValue::zero());
    }

    #[test]
    fn exact_and_numeric_energy_agree() {
        for n in 3..=9 {
            let g = dihedral_graph(n);
            let a = energy_with(&g, Method::Exact).unwrap();
            let b = energy_with(&g, Method::Numeric).unwrap();
            assert!(close(a.numeric, b.numeric, 1e-8), "n={n}: {} vs {}", a.numeric, b.numeric);
        }
    }

    #[test]
    fn json_roundtrip() {
        let s = Spectrum::new([(surd(1, 1, 7), 1), (ExactRoot::integer(-1), 2), (ExactRoot::NumericOnly { value: 0.5, error: 1e-12 }, 1)]);
        let j = serde_json::to_string(&s.to_json()).unwrap();
        let rows: Vec<SpectrumEntryJson> = serde_json::from_str(&j).unwrap();
        assert_eq!(Spectrum::from_json(&rows).unwrap(), s);
    }
}
