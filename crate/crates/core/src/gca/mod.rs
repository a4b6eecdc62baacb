//! Free bigraded graded-commutative algebras over F3.
//!
//! A [`Gca`] is an ordered alphabet of generators, each with a bidegree and
//! a parity. Monomials are exponent vectors in that order, with odd
//! exponents bounded by one; an [`Element`] maps monomials to nonzero
//! coefficients and is always kept in normal form, so `==` is equality in
//! the algebra. Singly graded algebras use bidegrees `(d, 0)`.

mod expr;
mod maps;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;
use thiserror::Error;

use crate::linalg::F3;

pub use expr::{parse_element, SymbolTable};
pub use maps::{derivation_extend, endo_extend, AlgebraMap, DerivationSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcaError {
    #[error("unknown generator or symbol `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{name}` has invalid bidegree or parity: {reason}")]
    BadGenerator { name: String, reason: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("monomial `{0}` is not in the requested basis")]
    NotInBasis(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("value for `{name}` has bidegree {got}, expected {expected}")]
    BidegreeMismatch { name: String, expected: Bidegree, got: Bidegree },
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Bidegree {
    pub n: i32,
    pub m: i32,
}

impl Bidegree {
    pub const fn new(n: i32, m: i32) -> Self {
        Bidegree { n, m }
    }

    pub fn total(self) -> i32 {
        self.n + self.m
    }

    pub fn is_valid(self) -> bool {
        self.n >= 0 && self.m >= 0
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.n + o.n, self.m + o.m)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.n - o.n, self.m - o.m)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(degree: i32) -> Parity {
        if degree.rem_euclid(2) == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub bidegree: Bidegree,
    pub parity: Parity,
}

impl GeneratorSpec {
    pub fn new(name: &str, n: i32, m: i32) -> Self {
        GeneratorSpec { name: name.to_string(), bidegree: Bidegree::new(n, m), parity: Parity::of(n + m) }
    }
}

/// Exponent vector in the alphabet's generator order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Whether `self` divides `other` as exponent vectors.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// A normalized F3-linear combination of monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, F3>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn monomial(m: Monomial, c: F3) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, F3)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> F3 {
        self.terms.get(m).copied().unwrap_or(F3::ZERO)
    }

    pub fn add_term(&mut self, m: Monomial, c: F3) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: F3) {
        if c.is_zero() {
            return;
        }
        for (m, v) in other.terms() {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: F3) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, &v)| (m.clone(), v * c)).collect() }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        let mut r = self.clone();
        r.add_scaled(o, F3::ONE);
        r
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        let mut r = self.clone();
        r.add_scaled(o, F3::TWO);
        r
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(F3::TWO)
    }
}

/// An ordered basis of monomials with a reverse index, used to move between
/// elements and coordinate vectors.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn coordinates(&self, e: &Element) -> Result<Vec<F3>, GcaError> {
        let mut v = vec![F3::ZERO; self.len()];
        for (m, c) in e.terms() {
            let i = self.position(m).ok_or_else(|| GcaError::NotInBasis(format!("{:?}", m.0)))?;
            v[i] = c;
        }
        Ok(v)
    }

    pub fn element(&self, coords: &[F3]) -> Element {
        let mut e = Element::zero();
        for (m, &c) in self.monomials.iter().zip(coords) {
            e.add_term(m.clone(), c);
        }
        e
    }
}

#[derive(Clone, Debug)]
pub struct Gca {
    gens: Vec<GeneratorSpec>,
    index: HashMap<String, usize>,
    odd: Vec<bool>,
}

impl Gca {
    pub fn new(gens: Vec<GeneratorSpec>) -> Result<Self, GcaError> {
        let mut index = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if !g.bidegree.is_valid() || g.bidegree.total() == 0 {
                return Err(GcaError::BadGenerator {
                    name: g.name.clone(),
                    reason: format!("bidegree {} must be non-negative and nonzero", g.bidegree),
                });
            }
            if g.parity != Parity::of(g.bidegree.total()) {
                return Err(GcaError::BadGenerator {
                    name: g.name.clone(),
                    reason: "parity must equal total degree mod 2".into(),
                });
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(GcaError::DuplicateGenerator(g.name.clone()));
            }
        }
        let odd = gens.iter().map(|g| g.parity == Parity::Odd).collect();
        Ok(Gca { gens, index, odd })
    }

    /// `Λ(u) ⊗ F3[t] ⊗ Λ(y1, y2) ⊗ F3[x1, x2]` with u, t in the fibre
    /// direction and y_i, x_i in the base direction.
    pub fn e2() -> Self {
        Gca::new(vec![
            GeneratorSpec::new("u", 0, 1),
            GeneratorSpec::new("t", 0, 2),
            GeneratorSpec::new("y1", 1, 0),
            GeneratorSpec::new("y2", 1, 0),
            GeneratorSpec::new("x1", 2, 0),
            GeneratorSpec::new("x2", 2, 0),
        ])
        .expect("fixed alphabet is valid")
    }

    /// A singly graded alphabet; generator `i` gets bidegree `(deg_i, 0)`.
    pub fn singly_graded<S: AsRef<str>>(gens: &[(S, i32)]) -> Result<Self, GcaError> {
        Gca::new(gens.iter().map(|(n, d)| GeneratorSpec::new(n.as_ref(), *d, 0)).collect())
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn one(&self) -> Element {
        Element::monomial(Monomial::one(self.len()), F3::ONE)
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut m = Monomial::one(self.len());
        m.0[i] = 1;
        Element::monomial(m, F3::ONE)
    }

    pub fn gen(&self, name: &str) -> Result<Element, GcaError> {
        let i = self.generator_index(name).ok_or_else(|| GcaError::UnknownGenerator(name.to_string()))?;
        Ok(self.generator(i))
    }

    pub fn monomial_bidegree(&self, m: &Monomial) -> Bidegree {
        let mut b = Bidegree::default();
        for (g, &e) in self.gens.iter().zip(&m.0) {
            b.n += g.bidegree.n * e as i32;
            b.m += g.bidegree.m * e as i32;
        }
        b
    }

    /// Common bidegree of all terms; `None` for the zero element.
    pub fn bidegree(&self, e: &Element) -> Result<Option<Bidegree>, GcaError> {
        let mut out = None;
        for (m, _) in e.terms() {
            let b = self.monomial_bidegree(m);
            match out {
                None => out = Some(b),
                Some(o) if o != b => return Err(GcaError::NotHomogeneous),
                _ => {}
            }
        }
        Ok(out)
    }

    pub fn monomial_is_odd(&self, m: &Monomial) -> bool {
        m.0.iter().zip(&self.odd).filter(|(&e, &o)| o && e % 2 == 1).count() % 2 == 1
    }

    /// Product of two monomials with its Koszul sign, or `None` when an odd
    /// generator would appear squared.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, F3)> {
        let mut swaps = 0usize;
        let mut odd_in_b_before = 0usize;
        let mut exps = Vec::with_capacity(a.0.len());
        for i in 0..a.0.len() {
            let (ea, eb) = (a.0[i], b.0[i]);
            if self.odd[i] {
                if ea + eb > 1 {
                    return None;
                }
                // each odd factor of `a` must move past the odd factors of
                // `b` that precede it in the generator order
                if ea == 1 {
                    swaps += odd_in_b_before;
                }
                if eb == 1 {
                    odd_in_b_before += 1;
                }
            }
            exps.push(ea + eb);
        }
        let sign = if swaps % 2 == 0 { F3::ONE } else { F3::TWO };
        Some((Monomial(exps), sign))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if let Some((m, s)) = self.mul_monomials(ma, mb) {
                    out.add_term(m, s * ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &Element, k: u32) -> Element {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Product of a word of generator powers, taken in the given order.
    pub fn normal_form(&self, word: &[(&str, u32)]) -> Result<Element, GcaError> {
        let mut acc = self.one();
        for &(name, p) in word {
            let g = self.gen(name)?;
            acc = self.mul(&acc, &self.pow(&g, p));
        }
        Ok(acc)
    }

    /// Monomials of bidegree exactly `b`, in descending lexicographic order of
    /// exponent vectors.
    pub fn basis(&self, b: Bidegree) -> Vec<Monomial> {
        let mut out = Vec::new();
        if !b.is_valid() {
            return out;
        }
        let mut cur = vec![0u16; self.len()];
        self.enumerate(0, b, &mut cur, &mut out);
        out
    }

    fn enumerate(&self, i: usize, rem: Bidegree, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == self.len() {
            if rem == Bidegree::default() {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let g = self.gens[i].bidegree;
        let mut max = i32::MAX;
        if g.n > 0 {
            max = max.min(rem.n / g.n);
        }
        if g.m > 0 {
            max = max.min(rem.m / g.m);
        }
        if self.odd[i] {
            max = max.min(1);
        }
        for e in (0..=max).rev() {
            cur[i] = e as u16;
            let next = Bidegree::new(rem.n - e * g.n, rem.m - e * g.m);
            self.enumerate(i + 1, next, cur, out);
        }
        cur[i] = 0;
    }

    pub fn monomial_basis(&self, b: Bidegree) -> MonomialBasis {
        MonomialBasis::new(self.basis(b))
    }

    pub fn parse(&self, s: &str) -> Result<Element, GcaError> {
        parse_element(self, s, &SymbolTable::new())
    }

    pub fn parse_with(&self, s: &str, symbols: &SymbolTable) -> Result<Element, GcaError> {
        parse_element(self, s, symbols)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .gens
            .iter()
            .zip(&m.0)
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| if e == 1 { g.name.clone() } else { format!("{}^{}", g.name, e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Terms in descending monomial order, coefficient 2 written as a minus
    /// sign: `x1^2*x2 - x2^3`.
    pub fn format(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in e.terms().rev().enumerate() {
            let neg = c == F3::TWO;
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&self.format_monomial(m));
        }
        s
    }
}
