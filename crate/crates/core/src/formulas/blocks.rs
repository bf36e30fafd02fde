//! Block-determinant formulas for `Γ(G × S₃)`, `Γ(G × D₂ₙ)` (`n` even) and
//! `Γ(G × D₈)`, checked by exact evaluation at `x = 1, …, N+1`.
//!
//! With `A⁰` the augmented adjacency of `G` (order `k`, centre size `t`),
//! `J` the all-ones `k×k` block and `|M|` a determinant:
//!
//! * `G×S₃`: `(−x)^k |A⁰−xI−J|² |M₃| / (−x)^t`, where
//!   `M₃ = [[A⁰−xI, 2A⁰, 3A⁰], [A⁰, 2A⁰−xI, 3J], [A⁰, 2J, A⁰−xI+2J]]`;
//! * `G×D₂ₙ`: `(−x)^{k(3n/2−2)} |2A⁰−xI−2J|^{n/2−1} |M| / (−x)^{2t}`, where
//!   `M = [[2A⁰−xI, (n−2)A⁰, nA⁰], [2A⁰, (n−2)A⁰−xI, nJ], [2A⁰, (n−2)J, 2A⁰−xI+(n−2)J]]`;
//! * `G×D₈`: `(−x)^{4k} |2A⁰−xI−2J|² |[[2A⁰−xI, 6A⁰], [2A⁰, 2A⁰−xI+4J]]| / (−x)^{2t}`.
//!
//! Each equals `det(A − xI)` for the product graph.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::graph::{augmented_adjacency, noncommuting_graph};
use crate::group::{direct_product, make_dihedral, make_symmetric, FiniteGroup};
use crate::matrix::IntMatrix;
use crate::report::VerificationReport;
use crate::roots::poly_identity_check;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockFamily {
    GxS3,
    /// `n` even, `n ≥ 4`.
    GxD2n(usize),
    GxD8,
}

impl fmt::Display for BlockFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockFamily::GxS3 => write!(f, "block-gxs3"),
            BlockFamily::GxD2n(n) => write!(f, "block-gxd2n(n={n})"),
            BlockFamily::GxD8 => write!(f, "block-gxd8"),
        }
    }
}

impl BlockFamily {
    pub fn id(&self) -> &'static str {
        match self {
            BlockFamily::GxS3 => "block-gxs3",
            BlockFamily::GxD2n(_) => "block-gxd2n",
            BlockFamily::GxD8 => "block-gxd8",
        }
    }

    pub fn factor(&self) -> Result<FiniteGroup> {
        match *self {
            BlockFamily::GxS3 => make_symmetric(3),
            BlockFamily::GxD2n(n) => {
                if n % 2 == 1 || n < 4 {
                    return Err(Error::InvalidArgument(format!("G x D2n needs an even n >= 4, got {n}")));
                }
                make_dihedral(n)
            }
            BlockFamily::GxD8 => make_dihedral(4),
        }
    }
}

/// The right-hand side evaluated at an integer `x ≠ 0`. Returns `None` if
/// the division by the power of `−x` is not exact.
pub fn block_rhs(family: BlockFamily, a0: &IntMatrix, center: usize, x: i64) -> Option<BigInt> {
    let k = a0.dim();
    let j = IntMatrix::filled(k, 1);
    let z = IntMatrix::zeros(k);
    let blk = |s: i64, t: i64, d: i64| a0.combine(s, &j, t, d);
    let jb = |t: i64| z.combine(0, &j, t, 0);
    let mx = BigInt::from(-x);
    let (num, den_exp) = match family {
        BlockFamily::GxS3 => {
            let m = IntMatrix::from_blocks(&[
                vec![blk(1, 0, -x), blk(2, 0, 0), blk(3, 0, 0)],
                vec![blk(1, 0, 0), blk(2, 0, -x), jb(3)],
                vec![blk(1, 0, 0), jb(2), blk(1, 2, -x)],
            ])
            .ok()?;
            let outer = blk(1, -1, -x).det();
            (mx.pow(k as u32) * &outer * &outer * m.det(), center)
        }
        BlockFamily::GxD2n(n) => {
            let n = n as i64;
            let m = IntMatrix::from_blocks(&[
                vec![blk(2, 0, -x), blk(n - 2, 0, 0), blk(n, 0, 0)],
                vec![blk(2, 0, 0), blk(n - 2, 0, -x), jb(n)],
                vec![blk(2, 0, 0), jb(n - 2), blk(2, n - 2, -x)],
            ])
            .ok()?;
            let outer = blk(2, -2, -x).det();
            let e = k as u32 * (3 * n as u32 / 2 - 2);
            (mx.pow(e) * outer.pow(n as u32 / 2 - 1) * m.det(), 2 * center)
        }
        BlockFamily::GxD8 => {
            let m = IntMatrix::from_blocks(&[vec![blk(2, 0, -x), blk(6, 0, 0)], vec![blk(2, 0, 0), blk(2, 4, -x)]]).ok()?;
            let outer = blk(2, -2, -x).det();
            (mx.pow(4 * k as u32) * &outer * &outer * m.det(), 2 * center)
        }
    };
    let den = mx.pow(den_exp as u32);
    let (q, r) = num.div_rem(&den);
    r.is_zero().then_some(q)
}

/// Evaluates both sides at `x = 1..=N+1` (no pole at these points) and
/// reports the first disagreement.
pub fn block_factorization_check(family: BlockFamily, g: Arc<FiniteGroup>, cap: usize) -> Result<VerificationReport> {
    if g.is_abelian() {
        return Err(Error::InvalidArgument(format!("{} is abelian", g.label())));
    }
    let h = Arc::new(family.factor()?);
    let gh = direct_product(g.clone(), h, cap)?;
    let graph = noncommuting_graph(&gh);
    let n = graph.vertex_count();
    let cp = charpoly(&graph.adjacency())?;
    let a0 = augmented_adjacency(&g).adjacency();
    let t = g.center().len();
    // det(A − xI) = (−1)^N det(xI − A)
    let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let lhs = |x: i64| &sign * cp.eval(&BigInt::from(x));
    let rhs = |x: i64| block_rhs(family, &a0, t, x).unwrap_or_else(|| BigInt::from(i64::MIN));

    let mut r = VerificationReport::new(family.id()).param("G", g.label());
    if let BlockFamily::GxD2n(m) = family {
        r = r.param("n", m);
    }
    r = r.param("points", n + 1);
    match poly_identity_check(lhs, rhs, n) {
        Ok(()) => {
            r = r.sides(format!("det(A - xI) of the {n}-vertex product graph"), "block determinant form; equal at all sample points");
        }
        Err(x) => {
            let got = lhs(x);
            let want = block_rhs(family, &a0, t, x).map_or_else(|| "non-integer".to_string(), |v| v.to_string());
            r = r.sides(got.to_string(), &want);
            r.fail(format!("sides differ at x = {x}"));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_CAP;

    fn d(n: usize) -> Arc<FiniteGroup> {
        Arc::new(make_dihedral(n).unwrap())
    }

    #[test]
    fn gxs3_d6() {
        let r = block_factorization_check(BlockFamily::GxS3, d(3), DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn gxd8_d6() {
        let r = block_factorization_check(BlockFamily::GxD8, d(3), DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn d2n_at_four_equals_d8_form() {
        let a0 = augmented_adjacency(&make_dihedral(4).unwrap()).adjacency();
        for x in [1, 2, 5] {
            assert_eq!(block_rhs(BlockFamily::GxD2n(4), &a0, 2, x), block_rhs(BlockFamily::GxD8, &a0, 2, x));
        }
        assert!(BlockFamily::GxD2n(5).factor().is_err());
    }
}
