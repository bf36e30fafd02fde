//! Finite groups with exact multiplication.
//!
//! Elements are indices `0..order`. Every constructor places the central
//! elements first (identity at index 0), so the vertex order of a
//! non-commuting graph is the group's element order with a prefix removed.
//! Groups of order at most [`TABLE_LIMIT`] get a dense Cayley table; above
//! that the structured law is evaluated directly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::field::{prime_power, FieldElement, GaloisField};

/// Largest order that gets a dense Cayley table.
pub const TABLE_LIMIT: usize = 1024;

/// Largest order for which associativity is checked exhaustively.
const EXHAUSTIVE_AXIOM_LIMIT: usize = 64;

#[derive(Debug)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    identity: usize,
    kind: Kind,
    table: Option<Vec<u32>>,
    center: OnceLock<Vec<usize>>,
}

#[derive(Debug)]
enum Kind {
    Cyclic(usize),
    Dihedral(DihedralLaw),
    Symmetric(SymmetricLaw),
    Gl2(Box<Gl2Law>),
    Product(Arc<FiniteGroup>, Arc<FiniteGroup>),
}

/// `s^flip r^rot`, with `r^n = s^2 = e` and `s r s = r^{-1}`.
#[derive(Debug)]
struct DihedralLaw {
    n: usize,
    elems: Vec<(bool, usize)>,
    index: Vec<u32>,
}

#[derive(Debug)]
struct SymmetricLaw {
    perms: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, u32>,
}

#[derive(Debug)]
struct Gl2Law {
    field: GaloisField,
    /// Row-major entries `[a, b, c, d]` of each element.
    mats: Vec<[FieldElement; 4]>,
    /// Encoded matrix -> element index (`u32::MAX` for singular matrices).
    index: Vec<u32>,
}

impl Gl2Law {
    fn encode(&self, m: &[FieldElement; 4]) -> usize {
        let q = self.field.order() as usize;
        m.iter().fold(0, |acc, e| acc * q + e.0 as usize)
    }

    fn mul(&self, x: &[FieldElement; 4], y: &[FieldElement; 4]) -> [FieldElement; 4] {
        let f = &self.field;
        [
            f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
            f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
            f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
            f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3])),
        ]
    }
}

impl Kind {
    fn multiply(&self, a: usize, b: usize) -> usize {
        match self {
            Kind::Cyclic(n) => (a + b) % n,
            Kind::Dihedral(law) => {
                let n = law.n;
                let (f1, k1) = law.elems[a];
                let (f2, k2) = law.elems[b];
                let (f, k) = if f2 { (!f1, (k2 + n - k1) % n) } else { (f1, (k1 + k2) % n) };
                law.index[usize::from(f) * n + k] as usize
            }
            Kind::Symmetric(law) => {
                let (pa, pb) = (&law.perms[a], &law.perms[b]);
                let c: Vec<u8> = pb.iter().map(|&i| pa[i as usize]).collect();
                law.index[&c] as usize
            }
            Kind::Gl2(law) => {
                let m = law.mul(&law.mats[a], &law.mats[b]);
                law.index[law.encode(&m)] as usize
            }
            Kind::Product(g, h) => {
                let hn = h.order();
                g.multiply(a / hn, b / hn) * hn + h.multiply(a % hn, b % hn)
            }
        }
    }
}

impl FiniteGroup {
    fn build(label: String, order: usize, kind: Kind) -> Self {
        let tabulate = order <= TABLE_LIMIT && !matches!(kind, Kind::Cyclic(_) | Kind::Product(..));
        let table = tabulate.then(|| {
            let mut t = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    t.push(kind.multiply(a, b) as u32);
                }
            }
            t
        });
        FiniteGroup { label, order, identity: 0, kind, table, center: OnceLock::new() }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    #[inline]
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.kind.multiply(a, b),
        }
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.multiply(a, b) == self.multiply(b, a)
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.elements().find(|&b| self.multiply(a, b) == self.identity)
    }

    /// Elements commuting with every element, in element order.
    pub fn center(&self) -> &[usize] {
        self.center.get_or_init(|| {
            self.elements().filter(|&x| self.elements().all(|y| self.commutes(x, y))).collect()
        })
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.center().binary_search(&x).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order
    }

    pub fn centralizer(&self, x: usize) -> Result<Vec<usize>> {
        if x >= self.order {
            return Err(Error::InvalidArgument(format!("element {x} out of range for order {}", self.order)));
        }
        Ok(self.elements().filter(|&y| self.commutes(x, y)).collect())
    }

    /// Factors of a direct product, if this is one.
    pub fn factors(&self) -> Option<(&FiniteGroup, &FiniteGroup)> {
        match &self.kind {
            Kind::Product(g, h) => Some((g, h)),
            _ => None,
        }
    }

    /// Index of the pair `(a, b)` in a direct product.
    pub fn pair(&self, a: usize, b: usize) -> Option<usize> {
        self.factors().map(|(_, h)| a * h.order() + b)
    }

    pub fn element_name(&self, x: usize) -> String {
        match &self.kind {
            Kind::Cyclic(_) => match x {
                0 => "e".into(),
                1 => "g".into(),
                _ => format!("g^{x}"),
            },
            Kind::Dihedral(law) => {
                let (f, k) = law.elems[x];
                let rot = match k {
                    0 => String::new(),
                    1 => "r".into(),
                    _ => format!("r^{k}"),
                };
                match (f, k) {
                    (false, 0) => "e".into(),
                    (false, _) => rot,
                    (true, 0) => "s".into(),
                    (true, _) => format!("s*{rot}"),
                }
            }
            Kind::Symmetric(law) => {
                let body: Vec<String> = law.perms[x].iter().map(|v| v.to_string()).collect();
                format!("[{}]", body.join(" "))
            }
            Kind::Gl2(law) => {
                let m = &law.mats[x];
                let s = |e: FieldElement| law.field.element_string(e);
                format!("[[{},{}],[{},{}]]", s(m[0]), s(m[1]), s(m[2]), s(m[3]))
            }
            Kind::Product(g, h) => {
                let hn = h.order();
                format!("({}, {})", g.element_name(x / hn), h.element_name(x % hn))
            }
        }
    }

    /// Checks identity, inverses and associativity (exhaustive up to order
    /// 64, otherwise `samples` random triples).
    pub fn check_axioms(&self, samples: usize, seed: u64) -> std::result::Result<(), String> {
        let e = self.identity;
        for x in self.elements() {
            if self.multiply(e, x) != x || self.multiply(x, e) != x {
                return Err(format!("identity fails at {x}"));
            }
            let inv = self.inverse(x).ok_or_else(|| format!("{x} has no right inverse"))?;
            if self.multiply(inv, x) != e {
                return Err(format!("inverse of {x} is one-sided"));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.multiply(self.multiply(a, b), c) == self.multiply(a, self.multiply(b, c))
        };
        if self.order <= EXHAUSTIVE_AXIOM_LIMIT {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        if !assoc(a, b, c) {
                            return Err(format!("associativity fails at ({a}, {b}, {c})"));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(seed);
            for _ in 0..samples {
                let (a, b, c) = (rng.gen_range(0..self.order), rng.gen_range(0..self.order), rng.gen_range(0..self.order));
                if !assoc(a, b, c) {
                    return Err(format!("associativity fails at ({a}, {b}, {c})"));
                }
            }
        }
        Ok(())
    }
}

/// Dihedral group D₂ₙ of order 2n.
///
/// Element order: identity, then the central rotation `r^{n/2}` when `n` is
/// even, then the remaining rotations in increasing power, then the
/// reflections. For even `n` the reflections are interleaved as
/// `s, s r^{n/2}, s r, s r^{1+n/2}, …` so that commuting reflection pairs are
/// adjacent.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("dihedral:{n}: n must be at least 3 (D4 is abelian)")));
    }
    let mut elems = vec![(false, 0)];
    let half = (n % 2 == 0).then_some(n / 2);
    if let Some(h) = half {
        elems.push((false, h));
    }
    elems.extend((1..n).filter(|&k| Some(k) != half).map(|k| (false, k)));
    match half {
        Some(h) => {
            for i in 0..h {
                elems.push((true, i));
                elems.push((true, i + h));
            }
        }
        None => elems.extend((0..n).map(|k| (true, k))),
    }
    let mut index = vec![0u32; 2 * n];
    for (i, &(f, k)) in elems.iter().enumerate() {
        index[usize::from(f) * n + k] = i as u32;
    }
    Ok(FiniteGroup::build(format!("D{}", 2 * n), 2 * n, Kind::Dihedral(DihedralLaw { n, elems, index })))
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic:0 is not a group".into()));
    }
    Ok(FiniteGroup::build(format!("C{n}"), n, Kind::Cyclic(n)))
}

/// Symmetric group S_k, permutations in lexicographic order.
pub fn make_symmetric(k: usize) -> Result<FiniteGroup> {
    if !(2..=6).contains(&k) {
        return Err(Error::InvalidArgument(format!("sym:{k}: k must be in 2..=6")));
    }
    let mut perms = Vec::new();
    let mut p: Vec<u8> = (0..k as u8).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let index = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
    let order = perms.len();
    Ok(FiniteGroup::build(format!("S{k}"), order, Kind::Symmetric(SymmetricLaw { perms, index })))
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// GL(2, q): invertible 2×2 matrices over GF(q).
///
/// Scalar matrices come first (identity at index 0), then the remaining
/// matrices in lexicographic order of their encoded entries.
pub fn make_gl2(q: u32, irreducible: Option<&[u32]>) -> Result<FiniteGroup> {
    if q <= 2 {
        return Err(Error::InvalidArgument(format!("gl2:{q}: q must be a prime power greater than 2")));
    }
    prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("gl2:{q}: {q} is not a prime power")))?;
    let field = match irreducible {
        Some(c) => GaloisField::with_polynomial(q, c)?,
        None => GaloisField::new(q)?,
    };
    let qs = q as usize;
    let els: Vec<FieldElement> = field.elements().collect();
    let zero = field.zero();
    let one = field.one();
    let mut scalars = vec![[one, zero, zero, one]];
    scalars.extend(els.iter().filter(|&&a| a != zero && a != one).map(|&a| [a, zero, zero, a]));
    let mut mats = scalars.clone();
    for &a in &els {
        for &b in &els {
            for &c in &els {
                for &d in &els {
                    let det = field.sub(field.mul(a, d), field.mul(b, c));
                    let m = [a, b, c, d];
                    if det != zero && !(b == zero && c == zero && a == d) {
                        mats.push(m);
                    }
                }
            }
        }
    }
    let mut law = Gl2Law { field, mats, index: vec![u32::MAX; qs.pow(4)] };
    for i in 0..law.mats.len() {
        let code = law.encode(&law.mats[i]);
        law.index[code] = i as u32;
    }
    let order = law.mats.len();
    Ok(FiniteGroup::build(format!("GL(2,{q})"), order, Kind::Gl2(Box::new(law))))
}

/// Direct product with componentwise multiplication; element `(a, b)` has
/// index `a * |h| + b`.
pub fn direct_product(g: Arc<FiniteGroup>, h: Arc<FiniteGroup>, cap: usize) -> Result<FiniteGroup> {
    let order = g
        .order()
        .checked_mul(h.order())
        .filter(|&o| o <= cap)
        .ok_or(Error::OrderCap { order: g.order().saturating_mul(h.order()), cap })?;
    let label = format!("{}x{}", g.label(), h.label());
    Ok(FiniteGroup::build(label, order, Kind::Product(g, h)))
}

/// Parsed group descriptor.
///
/// Grammar: `dihedral:<n>`, `cyclic:<n>`, `sym:<k>`, `gl2:<q>` (optionally
/// `gl2:<q>[c0,c1,…]` with the modulus coefficients low to high), and
/// `prod(<spec>,<spec>)`, nestable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Dihedral(usize),
    Cyclic(usize),
    Symmetric(usize),
    Gl2 { q: u32, irreducible: Option<Vec<u32>> },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    /// Order of the described group, without constructing it (saturating).
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Dihedral(n) => n.saturating_mul(2),
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Symmetric(k) => (1..=*k).fold(1usize, |a, b| a.saturating_mul(b)),
            GroupSpec::Gl2 { q, .. } => {
                let q = *q as usize;
                (q * q - 1).saturating_mul(q * q - q)
            }
            GroupSpec::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    pub fn build(&self, cap: usize) -> Result<Arc<FiniteGroup>> {
        let order = self.order();
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
        Ok(Arc::new(match self {
            GroupSpec::Dihedral(n) => make_dihedral(*n)?,
            GroupSpec::Cyclic(n) => make_cyclic(*n)?,
            GroupSpec::Symmetric(k) => make_symmetric(*k)?,
            GroupSpec::Gl2 { q, irreducible } => make_gl2(*q, irreducible.as_deref())?,
            GroupSpec::Product(a, b) => direct_product(a.build(cap)?, b.build(cap)?, cap)?,
        }))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Symmetric(k) => write!(f, "sym:{k}"),
            GroupSpec::Gl2 { q, irreducible: None } => write!(f, "gl2:{q}"),
            GroupSpec::Gl2 { q, irreducible: Some(c) } => {
                let body: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "gl2:{q}[{}]", body.join(","))
            }
            GroupSpec::Product(a, b) => write!(f, "prod({a},{b})"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = SpecParser { src: &compact, pos: 0 };
        let spec = p.spec().map_err(|reason| Error::Parse { spec: s.to_string(), reason })?;
        if p.pos != compact.len() {
            return Err(Error::Parse { spec: s.to_string(), reason: format!("trailing input at offset {}", p.pos) });
        }
        // Validate parameter ranges early so parse errors surface as such.
        spec.validate().map_err(|reason| Error::Parse { spec: s.to_string(), reason })?;
        Ok(spec)
    }
}

impl GroupSpec {
    fn validate(&self) -> std::result::Result<(), String> {
        match self {
            GroupSpec::Dihedral(n) if *n < 3 => Err(format!("dihedral needs n >= 3, got {n}")),
            GroupSpec::Cyclic(0) => Err("cyclic needs n >= 1".into()),
            GroupSpec::Symmetric(k) if !(2..=6).contains(k) => Err(format!("sym needs 2 <= k <= 6, got {k}")),
            GroupSpec::Gl2 { q, .. } if *q <= 2 || prime_power(*q).is_none() => {
                Err(format!("gl2 needs a prime power q > 2, got {q}"))
            }
            GroupSpec::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> std::result::Result<(), String> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(format!("expected `{token}` at offset {}", self.pos))
        }
    }

    fn number(&mut self) -> std::result::Result<usize, String> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(format!("expected a number at offset {}", self.pos));
        }
        let v = self.rest()[..len].parse().map_err(|e| format!("bad number: {e}"))?;
        self.pos += len;
        Ok(v)
    }

    fn spec(&mut self) -> std::result::Result<GroupSpec, String> {
        if self.eat("prod(") {
            let a = self.spec()?;
            self.expect(",")?;
            let b = self.spec()?;
            self.expect(")")?;
            return Ok(GroupSpec::Product(Box::new(a), Box::new(b)));
        }
        if self.eat("dihedral:") {
            return Ok(GroupSpec::Dihedral(self.number()?));
        }
        if self.eat("cyclic:") {
            return Ok(GroupSpec::Cyclic(self.number()?));
        }
        if self.eat("sym:") {
            return Ok(GroupSpec::Symmetric(self.number()?));
        }
        if self.eat("gl2:") {
            let q = u32::try_from(self.number()?).map_err(|_| "q too large".to_string())?;
            let irreducible = if self.eat("[") {
                let mut c = vec![self.number()? as u32];
                while self.eat(",") {
                    c.push(self.number()? as u32);
                }
                self.expect("]")?;
                Some(c)
            } else {
                None
            };
            return Ok(GroupSpec::Gl2 { q, irreducible });
        }
        Err(format!("unknown group at offset {}: `{}`", self.pos, self.rest()))
    }
}
