//! Sparse Laurent polynomials in `x_1..x_m, y_1..y_n` with exact integer
//! coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], so iteration order is
//! the lexicographic order on the concatenated exponent vector `(x, y)`. That
//! order is also the one used for serialization and for the leading term in
//! [`LaurentPoly::exact_div`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("ambient mismatch: ({0},{1}) vs ({2},{3})")]
    AmbientMismatch(usize, usize, usize, usize),
    #[error("permutation sizes ({0},{1}) do not match ambient ({2},{3})")]
    PermutationSize(usize, usize, usize, usize),
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

/// Exponent vectors of `x_1..x_m` and `y_1..y_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

impl Monomial {
    pub fn one(m: usize, n: usize) -> Self {
        Monomial {
            x: vec![0; m],
            y: vec![0; n],
        }
    }

    pub fn new(x: Vec<i64>, y: Vec<i64>) -> Self {
        Monomial { x, y }
    }

    pub fn is_one(&self) -> bool {
        self.x.iter().chain(&self.y).all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        }
    }

    fn inverse(&self) -> Monomial {
        Monomial {
            x: self.x.iter().map(|e| -e).collect(),
            y: self.y.iter().map(|e| -e).collect(),
        }
    }

    fn exps(&self) -> impl Iterator<Item = &i64> {
        self.x.iter().chain(&self.y)
    }
}

/// A permutation of `{0, .., k-1}` given by its image vector: `i ↦ p[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, LaurentError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(LaurentError::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(k: usize) -> Self {
        Perm((0..k).collect())
    }

    /// The transposition swapping `i` and `j` in `S_k`.
    pub fn swap(k: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<usize> = (0..k).collect();
        v.swap(i, j);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn sign(&self) -> i64 {
        let inversions = (0..self.0.len())
            .tuple_combinations()
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// All of `S_k` with signs.
    pub fn all(k: usize) -> Vec<Perm> {
        (0..k).permutations(k).map(Perm).collect()
    }

    fn permute(&self, exps: &[i64]) -> Vec<i64> {
        let mut out = vec![0; exps.len()];
        for (i, &e) in exps.iter().enumerate() {
            out[self.0[i]] = e;
        }
        out
    }
}

/// Which block of variables an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    X,
    Y,
}

/// An element of `Z[x_1^{±1}, .., x_m^{±1}, y_1^{±1}, .., y_n^{±1}]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    m: usize,
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        LaurentPoly {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::constant(m, n, BigInt::one())
    }

    pub fn constant(m: usize, n: usize, c: impl Into<BigInt>) -> Self {
        Self::term(m, n, Monomial::one(m, n), c)
    }

    pub fn monomial(x: Vec<i64>, y: Vec<i64>) -> Self {
        let (m, n) = (x.len(), y.len());
        Self::term(m, n, Monomial::new(x, y), 1)
    }

    pub fn term(m: usize, n: usize, mono: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!((mono.x.len(), mono.y.len()), (m, n), "monomial ambient");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        LaurentPoly { m, n, terms }
    }

    /// `x_i^e` (zero-based index).
    pub fn x_pow(m: usize, n: usize, i: usize, e: i64) -> Self {
        let mut mono = Monomial::one(m, n);
        mono.x[i] = e;
        Self::term(m, n, mono, 1)
    }

    /// `y_j^e` (zero-based index).
    pub fn y_pow(m: usize, n: usize, j: usize, e: i64) -> Self {
        let mut mono = Monomial::one(m, n);
        mono.y[j] = e;
        Self::term(m, n, mono, 1)
    }

    /// Builds from `(x, y, coefficient)` triples, merging repeated monomials.
    pub fn from_terms<I, C>(m: usize, n: usize, terms: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = (Vec<i64>, Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(m, n);
        for (x, y, c) in terms {
            if x.len() != m || y.len() != n {
                return Err(LaurentError::Malformed(format!(
                    "monomial with {} x- and {} y-exponents in ambient ({m},{n})",
                    x.len(),
                    y.len()
                )));
            }
            p.add_term(Monomial::new(x, y), c.into());
        }
        Ok(p)
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.m, self.n)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ambient(&self, other: &LaurentPoly) -> Result<(), LaurentError> {
        if self.ambient() != other.ambient() {
            return Err(LaurentError::AmbientMismatch(
                self.m, self.n, other.m, other.n,
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_ambient(other)?;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Ok(LaurentPoly {
            m: self.m,
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.m, self.n);
        }
        LaurentPoly {
            m: self.m,
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^x y^y`.
    pub fn shift(&self, by: &Monomial) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(by), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut out = Self::one(self.m, self.n);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// The automorphism `x_i ↦ x_i^{-1}`, `y_j ↦ y_j^{-1}`.
    pub fn star(&self) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.inverse(), v.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one(self.m, self.n))
    }

    /// Substitutes `y_j ↦ -y_j`.
    pub fn negate_y(&self) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let deg: i64 = k.y.iter().sum();
                    let v = if deg.is_odd() { -v } else { v.clone() };
                    (k.clone(), v)
                })
                .collect(),
        }
    }

    /// Applies `(σ, τ) ∈ S_m × S_n`, sending `x_i ↦ x_{σ(i)}` and `y_j ↦ y_{τ(j)}`.
    pub fn act(&self, sigma: &Perm, tau: &Perm) -> Result<LaurentPoly, LaurentError> {
        if sigma.len() != self.m || tau.len() != self.n {
            return Err(LaurentError::PermutationSize(
                sigma.len(),
                tau.len(),
                self.m,
                self.n,
            ));
        }
        Ok(self.act_unchecked(sigma, tau))
    }

    fn act_unchecked(&self, sigma: &Perm, tau: &Perm) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    (
                        Monomial::new(sigma.permute(&k.x), tau.permute(&k.y)),
                        v.clone(),
                    )
                })
                .collect(),
        }
    }

    /// `Σ_{w ∈ S_m × S_n} sign(w) · w(p)`.
    pub fn alternate(&self) -> LaurentPoly {
        self.alternate_block(Block::X).alternate_block(Block::Y)
    }

    /// Antisymmetrizes over the permutations of a single block of variables.
    pub fn alternate_block(&self, block: Block) -> LaurentPoly {
        let k = match block {
            Block::X => self.m,
            Block::Y => self.n,
        };
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for perm in Perm::all(k) {
            let sign = perm.sign();
            for (mono, c) in &self.terms {
                let image = match block {
                    Block::X => Monomial::new(perm.permute(&mono.x), mono.y.clone()),
                    Block::Y => Monomial::new(mono.x.clone(), perm.permute(&mono.y)),
                };
                let entry = acc.entry(image).or_default();
                if sign > 0 {
                    *entry += c;
                } else {
                    *entry -= c;
                }
            }
        }
        LaurentPoly {
            m: self.m,
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Smallest exponent of each variable over all terms (zero for the zero
    /// polynomial).
    fn min_exponents(&self) -> Monomial {
        let mut lo = Monomial::one(self.m, self.n);
        let mut first = true;
        for mono in self.terms.keys() {
            if first {
                lo = mono.clone();
                first = false;
                continue;
            }
            for (l, e) in lo.x.iter_mut().zip(&mono.x) {
                *l = (*l).min(*e);
            }
            for (l, e) in lo.y.iter_mut().zip(&mono.y) {
                *l = (*l).min(*e);
            }
        }
        lo
    }

    /// Exact quotient `p / q` in the Laurent ring.
    ///
    /// Both operands are shifted by monomials into ordinary polynomials with no
    /// monomial factor, then divided with lexicographic leading terms. A
    /// nonzero remainder means no Laurent quotient exists.
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_ambient(q)?;
        if q.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.m, self.n));
        }
        let p_shift = self.min_exponents();
        let q_shift = q.min_exponents();
        let mut rem = self.shift(&p_shift.inverse());
        let divisor = q.shift(&q_shift.inverse());
        let (lead_mono, lead_coeff) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(k, v)| (k.clone(), v.clone()))
            .expect("nonzero divisor");
        let lead_inv = lead_mono.inverse();

        let mut quotient = Self::zero(self.m, self.n);
        while let Some((mono, c)) = rem.terms.iter().next_back() {
            let e = mono.mul(&lead_inv);
            if e.exps().any(|&v| v < 0) {
                return Err(LaurentError::NotDivisible);
            }
            let (qc, r) = c.div_rem(&lead_coeff);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&e), -(dc * &qc));
            }
            quotient.add_term(e, qc);
        }
        Ok(quotient.shift(&p_shift.mul(&q_shift.inverse())))
    }

    pub fn is_symmetric(&self) -> bool {
        let adjacent = |k: usize| (1..k).map(move |i| Perm::swap(k, i - 1, i));
        let id_x = Perm::identity(self.m);
        let id_y = Perm::identity(self.n);
        adjacent(self.m).all(|s| self.act_unchecked(&s, &id_y) == *self)
            && adjacent(self.n).all(|t| self.act_unchecked(&id_x, &t) == *self)
    }

    /// Symmetric in each block, and independent of `t` after `x_1 = t, y_1 = -t`.
    pub fn is_supersymmetric(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        if self.m == 0 || self.n == 0 {
            return true;
        }
        // key: remaining exponents, then the t-degree last
        let mut acc: HashMap<(Vec<i64>, i64), BigInt> = HashMap::new();
        for (mono, c) in &self.terms {
            let rest: Vec<i64> = mono.x[1..].iter().chain(&mono.y[1..]).copied().collect();
            let t_deg = mono.x[0] + mono.y[0];
            let c = if mono.y[0].is_odd() { -c } else { c.clone() };
            *acc.entry((rest, t_deg)).or_default() += c;
        }
        acc.iter().all(|((_, deg), c)| *deg == 0 || c.is_zero())
    }

    /// Largest exponent of any x-variable over all terms.
    pub fn max_x_exponent(&self) -> Option<i64> {
        self.terms.keys().flat_map(|k| k.x.iter().copied()).max()
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            m: self.m,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermJson {
                    x: k.x.clone(),
                    y: k.y.clone(),
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self, LaurentError> {
        let terms = json
            .terms
            .iter()
            .map(|t| {
                t.c.parse::<BigInt>()
                    .map(|c| (t.x.clone(), t.y.clone(), c))
                    .map_err(|e| LaurentError::Malformed(format!("coefficient {:?}: {e}", t.c)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_terms(json.m, json.n, terms)
    }
}

/// Canonical JSON form: terms in lexicographic exponent order, coefficients as
/// decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub m: usize,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
    pub c: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = PolyJson::deserialize(d)?;
        LaurentPoly::from_json(&json).map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$inner(rhs).expect("ambient mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, idx: usize, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{name}{}", idx + 1),
        _ => write!(f, "{name}{}^{e}", idx + 1),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if mono.is_one() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut first = true;
            for (idx, &e) in mono.x.iter().enumerate() {
                if e != 0 {
                    if !first {
                        write!(f, "*")?;
                    }
                    write_var(f, "x", idx, e)?;
                    first = false;
                }
            }
            for (idx, &e) in mono.y.iter().enumerate() {
                if e != 0 {
                    if !first {
                        write!(f, "*")?;
                    }
                    write_var(f, "y", idx, e)?;
                    first = false;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{},{}]({self})", self.m, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, e: i64) -> LaurentPoly {
        LaurentPoly::x_pow(2, 2, i, e)
    }

    fn y(j: usize, e: i64) -> LaurentPoly {
        LaurentPoly::y_pow(2, 2, j, e)
    }

    fn one11() -> LaurentPoly {
        LaurentPoly::one(1, 1)
    }

    fn y_over_x() -> LaurentPoly {
        LaurentPoly::monomial(vec![-1], vec![1])
    }

    #[test]
    fn star_examples() {
        assert_eq!(one11().star(), one11());
        let p = LaurentPoly::monomial(vec![1], vec![-2]);
        assert_eq!(p.star(), LaurentPoly::monomial(vec![-1], vec![2]));
        let p = one11() + y_over_x();
        assert_eq!(p.star(), one11() + LaurentPoly::monomial(vec![1], vec![-1]));
    }

    #[test]
    fn constant_term_examples() {
        assert_eq!(LaurentPoly::zero(1, 1).constant_term(), BigInt::zero());
        let p = LaurentPoly::constant(1, 1, 3) + LaurentPoly::monomial(vec![1], vec![0])
            - y_over_x().scale(&BigInt::from(2));
        assert_eq!(p.constant_term(), BigInt::from(3));
        let a = one11() + y_over_x();
        assert_eq!((&a * &a.star()).constant_term(), BigInt::from(2));
    }

    #[test]
    fn act_examples() {
        let p = x(0, 1) * y(1, 1);
        let id2 = Perm::identity(2);
        assert_eq!(p.act(&id2, &id2).unwrap(), p);
        let sw = Perm::swap(2, 0, 1);
        let q = LaurentPoly::x_pow(2, 0, 0, 1);
        assert_eq!(
            q.act(&sw, &Perm::identity(0)).unwrap(),
            LaurentPoly::x_pow(2, 0, 1, 1)
        );
        assert_eq!(p.act(&sw, &sw).unwrap(), x(1, 1) * y(0, 1));
        assert!(matches!(
            p.act(&Perm::identity(3), &id2),
            Err(LaurentError::PermutationSize(..))
        ));
    }

    #[test]
    fn act_is_a_group_action() {
        let p = x(0, 2) * y(1, -1) + x(1, 1) - y(0, 3);
        let all = Perm::all(2);
        for s1 in &all {
            for s2 in &all {
                for t1 in &all {
                    for t2 in &all {
                        let lhs = p.act(s2, t2).unwrap().act(s1, t1).unwrap();
                        let rhs = p.act(&s1.compose(s2), &t1.compose(t2)).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn alternate_examples() {
        let p = LaurentPoly::monomial(vec![1], vec![1]);
        assert_eq!(p.alternate(), p);
        let x1 = LaurentPoly::x_pow(2, 0, 0, 1);
        let x2 = LaurentPoly::x_pow(2, 0, 1, 1);
        assert_eq!(x1.alternate(), &x1 - &x2);
        assert!((&x1 * &x2).alternate().is_zero());
    }

    #[test]
    fn exact_div_examples() {
        let p = x(0, 2) - x(1, 2) + y(0, -1);
        assert_eq!(p.exact_div(&p).unwrap(), LaurentPoly::one(2, 2));
        let d = x(0, 1) - x(1, 1);
        assert_eq!(d.exact_div(&d).unwrap(), LaurentPoly::one(2, 2));
        let sq = x(0, 2) - x(1, 2);
        assert_eq!(sq.exact_div(&d).unwrap(), x(0, 1) + x(1, 1));
        // Laurent shifts on both sides
        let num = (x(0, -3) * y(1, 2)) * (&x(0, 1) + &x(1, -1));
        let den = x(0, 2) + x(0, 1) * x(1, -1);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(&q * &den, num);
    }

    #[test]
    fn exact_div_errors() {
        let d = x(0, 1) - x(1, 1);
        let p = x(0, 1) + x(1, 1);
        assert_eq!(p.exact_div(&d), Err(LaurentError::NotDivisible));
        assert_eq!(
            p.exact_div(&LaurentPoly::zero(2, 2)),
            Err(LaurentError::DivisionByZero)
        );
        let two = LaurentPoly::constant(2, 2, 2);
        assert_eq!(p.exact_div(&two), Err(LaurentError::NotDivisible));
    }

    #[test]
    fn supersymmetric_examples() {
        assert!(LaurentPoly::one(2, 2).is_supersymmetric());
        assert!(!LaurentPoly::x_pow(2, 0, 0, 1).is_supersymmetric());
        let kac = one11() + y_over_x();
        assert!(kac.is_supersymmetric());
        // x1 alone is symmetric for m=n=1 but fails the cancellation test
        assert!(!LaurentPoly::monomial(vec![1], vec![0]).is_supersymmetric());
        // standard representation x1 + y1
        let std = LaurentPoly::monomial(vec![1], vec![0]) + LaurentPoly::monomial(vec![0], vec![1]);
        assert!(std.is_supersymmetric());
    }

    #[test]
    fn ambient_mismatch() {
        let a = LaurentPoly::one(1, 1);
        let b = LaurentPoly::one(2, 1);
        assert!(matches!(a.try_add(&b), Err(LaurentError::AmbientMismatch(..))));
        assert!(matches!(a.try_mul(&b), Err(LaurentError::AmbientMismatch(..))));
    }

    #[test]
    fn json_is_canonical() {
        let p = x(1, 1) + x(0, -1).scale(&BigInt::from(-7)) + LaurentPoly::constant(2, 2, 5);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"m":2,"n":2,"terms":[{"x":[-1,0],"y":[0,0],"c":"-7"},{"x":[0,0],"y":[0,0],"c":"5"},{"x":[0,1],"y":[0,0],"c":"1"}]}"#
        );
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        let p = one11() - y_over_x().scale(&BigInt::from(2));
        assert_eq!(p.to_string(), "1 - 2*x1^-1*y1");
    }
}
