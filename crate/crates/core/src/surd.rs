//! Exact sums of square roots: `r₀ + Σ r_d·√d` with rational coefficients
//! and squarefree radicands `d > 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SurdSum {
    rational: BigRational,
    radicals: BTreeMap<u64, BigRational>,
}

/// `(s, f)` with `n = s²·f` and `f` squarefree.
pub fn split_square(n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut f = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            f *= p;
        }
        p += 1;
    }
    (s, f * rest)
}

impl SurdSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(r: BigRational) -> Self {
        SurdSum { rational: r, radicals: BTreeMap::new() }
    }

    pub fn integer(v: i64) -> Self {
        Self::rational(BigRational::from_integer(v.into()))
    }

    /// `coeff · √n`, simplified.
    pub fn sqrt_term(coeff: BigRational, n: u64) -> Self {
        let (s, f) = split_square(n);
        let c = coeff * BigRational::from_integer(s.into());
        let mut out = Self::zero();
        if n == 0 || c.is_zero() {
            return out;
        }
        if f == 1 {
            out.rational = c;
        } else {
            out.radicals.insert(f, c);
        }
        out
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn radicals(&self) -> &BTreeMap<u64, BigRational> {
        &self.radicals
    }

    pub fn is_rational(&self) -> bool {
        self.radicals.is_empty()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn add_assign(&mut self, other: &SurdSum) {
        self.rational += &other.rational;
        for (d, c) in &other.radicals {
            let e = self.radicals.entry(*d).or_insert_with(BigRational::zero);
            *e += c;
            if e.is_zero() {
                self.radicals.remove(d);
            }
        }
    }

    pub fn scaled(&self, k: &BigRational) -> SurdSum {
        if k.is_zero() {
            return Self::zero();
        }
        SurdSum {
            rational: &self.rational * k,
            radicals: self.radicals.iter().map(|(d, c)| (*d, c * k)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rational.to_f64().unwrap_or(f64::NAN);
        r + self.radicals.iter().map(|(d, c)| c.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt()).sum::<f64>()
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        if !self.rational.is_zero() {
            parts.push((self.rational.is_negative(), fmt_rational(&self.rational.abs())));
        }
        for (d, c) in &self.radicals {
            let mag = c.abs();
            let body = if mag.is_one() { format!("sqrt({d})") } else { format!("{}*sqrt({d})", fmt_rational(&mag)) };
            parts.push((c.is_negative(), body));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, "+{body}")?,
            }
        }
        Ok(())
    }
}

/// Accepts `2+2*sqrt(7)`, `108/5`, `8*(3+sqrt(33)+4*sqrt(3))`,
/// `(3-sqrt(57))`, and `√` for `sqrt`.
impl FromStr for SurdSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let src: String = s.replace('√', "sqrt").chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = SurdParser { s: src.as_bytes(), pos: 0 };
        let v = p.expr()?;
        if p.pos != p.s.len() {
            return Err(Error::InvalidArgument(format!("trailing input in surd expression `{s}`")));
        }
        Ok(v)
    }
}

struct SurdParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl SurdParser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::InvalidArgument(format!("surd parse error at offset {}: {what}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<SurdSum> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.term()?.scaled(&-BigRational::one())
        } else {
            self.term()?
        };
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            let t = if c == b'-' { t.scaled(&-BigRational::one()) } else { t };
            acc.add_assign(&t);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SurdSum> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = match (acc.as_rational(), rhs.as_rational()) {
                        (Some(k), _) => rhs.scaled(k),
                        (_, Some(k)) => acc.scaled(k),
                        _ => return Err(self.err("product of two irrational terms")),
                    };
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let k = rhs.as_rational().filter(|k| !k.is_zero()).ok_or_else(|| self.err("divisor must be a non-zero rational"))?;
                    acc = acc.scaled(&k.recip());
                }
                Some(b'(') | Some(b's') => {
                    // implicit multiplication: 8(3+sqrt(33))
                    let rhs = self.factor()?;
                    acc = match (acc.as_rational(), rhs.as_rational()) {
                        (Some(k), _) => rhs.scaled(k),
                        (_, Some(k)) => acc.scaled(k),
                        _ => return Err(self.err("product of two irrational terms")),
                    };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    fn factor(&mut self) -> Result<SurdSum> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b's') => {
                if !self.s[self.pos..].starts_with(b"sqrt") {
                    return Err(self.err("expected sqrt"));
                }
                self.pos += 4;
                // `sqrt(n)`, or a bare `sqrt n` from the `√n` shorthand
                let paren = self.peek() == Some(b'(');
                self.pos += paren as usize;
                let n = self.integer()?;
                if paren {
                    if self.peek() != Some(b')') {
                        return Err(self.err("expected `)`"));
                    }
                    self.pos += 1;
                }
                let n = n.to_u64().ok_or_else(|| self.err("radicand too large"))?;
                Ok(SurdSum::sqrt_term(BigRational::one(), n))
            }
            Some(c) if c.is_ascii_digit() => Ok(SurdSum::rational(BigRational::from_integer(self.integer()?))),
            _ => Err(self.err("expected number, sqrt(...) or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> SurdSum {
        x.parse().unwrap()
    }

    #[test]
    fn squares_split() {
        assert_eq!(split_square(48), (4, 3));
        assert_eq!(split_square(228), (2, 57));
        assert_eq!(split_square(36), (6, 1));
        assert_eq!(split_square(7), (1, 7));
        assert_eq!(split_square(1), (1, 1));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(s("8*(3+sqrt(33)+4*sqrt(3))"), s("24+32*sqrt(3)+8*sqrt(33)"));
        assert_eq!(s("8(3+√33+4√3)"), s("24+8*sqrt(33)+32*sqrt(3)"));
        assert_eq!(s("2+sqrt(36)"), s("8"));
        assert_eq!(s("108/5").as_rational().unwrap(), &BigRational::new(108.into(), 5.into()));
        assert_eq!(s("(3-sqrt(57))").to_string(), "3-sqrt(57)");
        assert_eq!(s("-2*sqrt(6)+2").to_string(), "2-2*sqrt(6)");
        assert_eq!(s("6+2*sqrt(57)").to_string(), "6+2*sqrt(57)");
        assert!("sqrt(2)*sqrt(3)".parse::<SurdSum>().is_err());
        assert!("1/0".parse::<SurdSum>().is_err());
        assert!("2+".parse::<SurdSum>().is_err());
    }

    #[test]
    fn numeric_value() {
        let e = s("8*(3+sqrt(33)+4*sqrt(3))");
        assert!((e.to_f64() - 125.382_127_014_508_3).abs() < 1e-9);
        assert_eq!(SurdSum::zero().to_string(), "0");
    }
}
