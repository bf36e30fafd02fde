//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails or exceeds its runtime budget.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use noncomm::charpoly::{charpoly, faddeev_leverrier};
use noncomm::formulas::blocks::{block_factorization_check, BlockFamily};
use noncomm::formulas::dihedral::{
    dihedral_graph, dihedral_laplacian_energy_definition, dihedral_laplacian_spectrum, dihedral_spectrum, verify_laplacian_energy,
};
use noncomm::formulas::gl2::{verify_gl2_charpoly, verify_gl2_energy};
use noncomm::formulas::multipartite::verify_multipartite;
use noncomm::formulas::products::{d2n_squared_check, d8xd8_check, product_scaling_check};
use noncomm::graph::noncommuting_graph;
use noncomm::reference::{reference, table1_row};
use noncomm::report::{Status, VerificationReport};
use noncomm::spectra::{assemble_exact_spectrum, eigenvalues_numeric, laplacian_energy};
use noncomm::surd::SurdSum;
use noncomm::{GroupSpec, DEFAULT_CAP};

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn group(s: &str) -> Arc<noncomm::FiniteGroup> {
    s.parse::<GroupSpec>().unwrap().build(DEFAULT_CAP).unwrap()
}

fn passed(r: &VerificationReport) -> Result<(), String> {
    if r.passed() {
        Ok(())
    } else {
        Err(format!("{r}"))
    }
}

fn rat(s: &str) -> BigRational {
    s.parse().unwrap()
}

/// Brute-force rows against the stored factored forms and energies.
fn table1() -> Check {
    const TOL: f64 = 1e-8;
    let want = ["2+2*sqrt(7)", "8", "4+4*sqrt(6)", "4+4*sqrt(7)", "6+2*sqrt(57)"];
    let rows = &reference().table1;
    if rows.iter().map(|e| e.n).collect::<Vec<_>>() != [3, 4, 5, 6, 8] {
        return Err("stored rows are not D6, D8, D10, D12, D16".into());
    }
    for (e, w) in rows.iter().zip(want) {
        let row = table1_row(e).map_err(|x| x.to_string())?;
        if row.status() != Status::Pass {
            return Err(format!("{row:?}"));
        }
        let g = dihedral_graph(e.n).unwrap();
        let spec = assemble_exact_spectrum(&charpoly(&g.adjacency()).unwrap()).unwrap();
        let w: SurdSum = w.parse().unwrap();
        if spec.energy().exact.as_ref() != Some(&w) {
            return Err(format!("D{}: energy {} != {w}", 2 * e.n, spec.energy()));
        }
        let numeric: f64 = eigenvalues_numeric(&g.adjacency().to_f64(), 1e-12).unwrap().iter().map(|v| v.abs()).sum();
        if (numeric - w.to_f64()).abs() > TOL {
            return Err(format!("D{}: numeric energy {numeric} vs {}", 2 * e.n, w.to_f64()));
        }
    }
    Ok("5 rows, tol 1e-8".into())
}

fn dihedral_sweep() -> Check {
    for n in 3..=12 {
        let got = assemble_exact_spectrum(&charpoly(&dihedral_graph(n).unwrap().adjacency()).unwrap()).unwrap();
        let want = dihedral_spectrum(n).unwrap();
        if got != want {
            return Err(format!("n={n}: {got} vs {want}"));
        }
    }
    Ok("n = 3..12".into())
}

/// `Σ|μ − s/N|` with `s = Σμ`, from a spectrum written as `(value, mult)`.
fn le_oracle(spec: &[(i64, i64)]) -> BigRational {
    let n: i64 = spec.iter().map(|p| p.1).sum();
    let s: i64 = spec.iter().map(|p| p.0 * p.1).sum();
    let mean = BigRational::new(s.into(), n.into());
    spec.iter()
        .map(|&(v, m)| {
            let d = BigRational::from_integer(v.into()) - &mean;
            (if d < BigRational::from_integer(0.into()) { -d } else { d }) * BigRational::from_integer(m.into())
        })
        .sum()
}

fn laplacian() -> Check {
    for n in 4..=8 {
        let g = dihedral_graph(n).unwrap();
        let got = assemble_exact_spectrum(&charpoly(&g.laplacian()).unwrap()).unwrap();
        if got != dihedral_laplacian_spectrum(n).unwrap() {
            return Err(format!("n={n}: Laplacian spectrum {got}"));
        }
    }
    for (n, want) in [(4, "8"), (6, "108/5"), (8, "304/7")] {
        let le = laplacian_energy(&dihedral_graph(n).unwrap()).unwrap();
        if le.exact_rational() != Some(&rat(want)) {
            return Err(format!("n={n}: LE {le} != {want}"));
        }
    }
    // odd n: printed spectra {0¹,5³,9⁵} and {0¹,7⁵,13⁷}
    for (n, spec, printed) in [(5, vec![(0, 1), (5, 3), (9, 5)], "60"), (7, vec![(0, 1), (7, 5), (13, 7)], "126")] {
        let oracle = le_oracle(&spec);
        let brute = laplacian_energy(&dihedral_graph(n).unwrap()).unwrap();
        if brute.exact_rational() != Some(&oracle) || dihedral_laplacian_energy_definition(n).unwrap() != oracle {
            return Err(format!("n={n}: definition value {brute} drifted from {oracle}"));
        }
        let r = verify_laplacian_energy(n).unwrap();
        if r.status != Status::DiscrepancyDocumented || r.rhs != printed {
            return Err(format!("n={n}: discrepancy not flagged: {r}"));
        }
    }
    if le_oracle(&[(0, 1), (5, 3), (9, 5)]) != rat("70/3") {
        return Err("oracle for D10 is not 70/3".into());
    }
    Ok("even LE 8, 108/5, 304/7; odd LE 70/3, 602/13 flagged".into())
}

fn gl2() -> Check {
    for q in [3, 4] {
        passed(&verify_gl2_charpoly(q, true, 0).map_err(|e| e.to_string())?)?;
        passed(&verify_gl2_energy(q).map_err(|e| e.to_string())?)?;
    }
    passed(&verify_gl2_charpoly(5, false, 3).map_err(|e| e.to_string())?)?;
    Ok("q=3,4 exact, q=5 mod 3 primes".into())
}

fn multipartite() -> Check {
    let mut rng = StdRng::seed_from_u64(0x6d70);
    for _ in 0..50 {
        let p = rng.gen_range(1..=8);
        let mut sizes = Vec::new();
        let mut total = 0;
        for _ in 0..p {
            let k = rng.gen_range(1..=(30 - total).clamp(1, 8));
            if total + k > 30 {
                break;
            }
            total += k;
            sizes.push(k);
        }
        passed(&verify_multipartite(&sizes).map_err(|e| e.to_string())?)?;
    }
    Ok("50 random size vectors, sum <= 30".into())
}

fn scaling() -> Check {
    for g in ["dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6"] {
        for h in ["cyclic:2", "cyclic:3", "cyclic:4", "prod(cyclic:2,cyclic:2)"] {
            passed(&product_scaling_check(group(g), group(h), DEFAULT_CAP).map_err(|e| e.to_string())?)?;
        }
    }
    Ok("16 products".into())
}

fn d8xd8() -> Check {
    passed(&d8xd8_check().map_err(|e| e.to_string())?)?;
    Ok("60 vertices".into())
}

fn d2n_squared() -> Check {
    passed(&d2n_squared_check(6, true, 0, DEFAULT_CAP).map_err(|e| e.to_string())?)?;
    let r = d2n_squared_check(8, false, 3, DEFAULT_CAP).map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok("n=6 exact, n=8 mod 3 primes".into())
}

fn blocks() -> Check {
    let cases = [
        (BlockFamily::GxS3, "dihedral:3"),
        (BlockFamily::GxS3, "dihedral:4"),
        (BlockFamily::GxD2n(4), "dihedral:3"),
        (BlockFamily::GxD2n(6), "dihedral:3"),
        (BlockFamily::GxD2n(4), "dihedral:4"),
        (BlockFamily::GxD8, "dihedral:3"),
        (BlockFamily::GxD8, "dihedral:4"),
        (BlockFamily::GxD8, "dihedral:5"),
    ];
    for (fam, g) in cases {
        passed(&block_factorization_check(fam, group(g), DEFAULT_CAP).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("{} cases", cases.len()))
}

/// Corpus: Γ(G) for the groups below with at most 60 vertices.
fn corpus() -> Vec<String> {
    let mut v: Vec<String> = (3..=31).map(|n| format!("dihedral:{n}")).collect();
    v.extend(
        ["sym:3", "sym:4", "gl2:3", "prod(dihedral:4,dihedral:4)", "prod(dihedral:3,cyclic:2)", "prod(dihedral:4,cyclic:3)", "prod(sym:3,sym:3)"]
            .map(String::from),
    );
    v
}

fn oracles() -> Check {
    let mut count = 0;
    for s in corpus() {
        let g = noncommuting_graph(&group(&s));
        if g.vertex_count() > 60 {
            continue;
        }
        for (what, m) in [("adjacency", g.adjacency()), ("Laplacian", g.laplacian())] {
            let hess = charpoly(&m).map_err(|e| e.to_string())?;
            if faddeev_leverrier(&m) != hess {
                return Err(format!("{s} {what}: Faddeev-LeVerrier disagrees"));
            }
            let n = m.dim();
            let eig = eigenvalues_numeric(&m.to_f64(), 1e-12).map_err(|e| e.to_string())?;
            let sum: f64 = eig.iter().sum();
            if (sum - m.trace() as f64).abs() > n as f64 * 1e-10 {
                return Err(format!("{s} {what}: eigenvalue sum {sum} vs trace {}", m.trace()));
            }
            // trace = −(coefficient of x^{n−1})
            if hess.coeff(n - 1) != BigInt::from(-m.trace()) {
                return Err(format!("{s} {what}: trace coefficient"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} matrices"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 dihedral adjacency table", 1, table1),
        ("2 dihedral spectrum sweep", 5, dihedral_sweep),
        ("3 Laplacian table and energies", 5, laplacian),
        ("4 GL(2,q) characteristic polynomial and energy", 120, gl2),
        ("5 complete multipartite machinery", 10, multipartite),
        ("6 product scaling", 30, scaling),
        ("7 D8 x D8", 10, d8xd8),
        ("8 D2n x D2n deflation", 120, d2n_squared),
        ("9 block determinant identities", 120, blocks),
        ("10 oracle self-consistency", 120, oracles),
    ];
    let mut ok = true;
    for (name, budget, f) in criteria {
        let t = Instant::now();
        let res = f();
        let dt = t.elapsed();
        let within = dt <= Duration::from_secs(budget);
        let line = match (&res, within) {
            (Ok(d), true) => format!("PASS {name} ({dt:.2?}, budget {budget}s): {d}"),
            (Ok(d), false) => format!("FAIL {name} ({dt:.2?} exceeds budget {budget}s): {d}"),
            (Err(e), _) => format!("FAIL {name} ({dt:.2?}): {e}"),
        };
        ok &= res.is_ok() && within;
        println!("{line}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
