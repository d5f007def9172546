//! Kac, Euler and Schur characters as Laurent polynomials, formal
//! combinations of basis characters, the shift operator `T` and the
//! Γ-graph characters of the principal `gl(2|2)` block.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagrams::{diagram_to_weight, Diagram, DiagramError, Kind};
use crate::laurent::{Block, LaurentError, LaurentPoly, Monomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("{0:?} is not non-increasing")]
    NotDominant(Vec<i64>),
    #[error("{0} is not of the form (B, B) with B in Z_{{<=0}}")]
    NotMaximallyAtypical(Diagram),
    #[error("expected basis {expected:?}, got {got:?}")]
    WrongBasis { expected: Basis, got: Basis },
    #[error("coefficient overflow")]
    Overflow,
    #[error("invalid graph parameters n={n}, m={m}")]
    InvalidGraph { n: i64, m: i64 },
}

/// `Δ(x) = ∏_{i<j}(1 - x_j/x_i)`, `Δ(y)` likewise, and
/// `Δ(x,y) = ∏_{i,j}(1 + y_j/x_i)`.
pub fn weyl_factors(m: usize, n: usize) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    let one = LaurentPoly::one(m, n);
    let mut dx = one.clone();
    for i in 0..m {
        for j in i + 1..m {
            let ratio = LaurentPoly::monomial(unit(m, &[(j, 1), (i, -1)]), vec![0; n]);
            dx = &dx * &(&one - &ratio);
        }
    }
    let mut dy = one.clone();
    for i in 0..n {
        for j in i + 1..n {
            let ratio = LaurentPoly::monomial(vec![0; m], unit(n, &[(j, 1), (i, -1)]));
            dy = &dy * &(&one - &ratio);
        }
    }
    let mut dxy = one.clone();
    for i in 0..m {
        for j in 0..n {
            let ratio = LaurentPoly::monomial(unit(m, &[(i, -1)]), unit(n, &[(j, 1)]));
            dxy = &dxy * &(&one + &ratio);
        }
    }
    (dx, dy, dxy)
}

fn unit(len: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; len];
    for &(i, e) in entries {
        v[i] += e;
    }
    v
}

fn staircase(k: usize) -> Vec<i64> {
    (0..k).rev().map(|e| e as i64).collect()
}

fn block_monomial(m: usize, n: usize, block: Block, exps: &[i64]) -> Monomial {
    let pad = |len: usize| {
        let mut v = exps.to_vec();
        v.resize(len, 0);
        v
    };
    match block {
        Block::X => Monomial::new(pad(m), vec![0; n]),
        Block::Y => Monomial::new(vec![0; m], pad(n)),
    }
}

/// Vandermonde determinant `∏_{i<j}(v_i - v_j)` of one block.
fn vandermonde(m: usize, n: usize, block: Block) -> LaurentPoly {
    let k = match block {
        Block::X => m,
        Block::Y => n,
    };
    LaurentPoly::term(m, n, block_monomial(m, n, block, &staircase(k)), 1).alternate_block(block)
}

/// Schur function `s_λ` of the `x` or `y` block of `P_{m,n}`, via the
/// bialternant. Negative parts are allowed.
pub fn schur(lambda: &[i64], block: Block, m: usize, n: usize) -> Result<LaurentPoly, CharError> {
    let k = match block {
        Block::X => m,
        Block::Y => n,
    };
    if lambda.len() != k {
        return Err(DiagramError::WrongLength {
            expected: k,
            got: lambda.len(),
        }
        .into());
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(CharError::NotDominant(lambda.to_vec()));
    }
    if k == 0 {
        return Ok(LaurentPoly::one(m, n));
    }
    let c = lambda[k - 1].min(0);
    let exps: Vec<i64> = lambda
        .iter()
        .zip(staircase(k))
        .map(|(l, d)| l - c + d)
        .collect();
    let num = LaurentPoly::term(m, n, block_monomial(m, n, block, &exps), 1).alternate_block(block);
    let s = num.exact_div(&vandermonde(m, n, block))?;
    Ok(s.shift(&block_monomial(m, n, block, &vec![c; k])))
}

/// `ch K(f) = Δ(x,y) s_λ(x) s_μ(y)`.
pub fn kac_char(f: &Diagram) -> Result<LaurentPoly, CharError> {
    f.require_kind(Kind::Full)?;
    let (m, n) = (f.m(), f.n());
    let w = diagram_to_weight(f);
    let (_, _, dxy) = weyl_factors(m, n);
    let sx = schur(&w.lambda, Block::X, m, n)?;
    let sy = schur(&w.mu, Block::Y, m, n)?;
    Ok(&(&dxy * &sx) * &sy)
}

/// Euler character of the one-dimensional `χ_{r,s}` attached to an Euler
/// diagram, by alternating
/// `∏_{i≤r}(1+y_j/x_i) ∏_{i>r, j≤s}(1+x_i/y_j) x^τ y^ν x^ρ y^ρ`
/// and dividing by the two Vandermonde determinants.
pub fn euler_char(g: &Diagram) -> Result<LaurentPoly, CharError> {
    g.require_kind(Kind::Euler)?;
    let (m, n) = (g.m(), g.n());
    let (r, s) = g.rank();
    let w = diagram_to_weight(g);
    let one = LaurentPoly::one(m, n);
    let mut num = one.clone();
    for i in 0..r {
        for j in 0..n {
            let ratio = LaurentPoly::monomial(unit(m, &[(i, -1)]), unit(n, &[(j, 1)]));
            num = &num * &(&one + &ratio);
        }
    }
    for i in r..m {
        for j in 0..s {
            let ratio = LaurentPoly::monomial(unit(m, &[(i, 1)]), unit(n, &[(j, -1)]));
            num = &num * &(&one + &ratio);
        }
    }
    let mut x: Vec<i64> = staircase(m);
    for (e, t) in x.iter_mut().zip(&w.lambda) {
        *e += t;
    }
    let mut y: Vec<i64> = staircase(n);
    for (e, v) in y.iter_mut().zip(&w.mu) {
        *e += v;
    }
    let num = num.shift(&Monomial::new(x, y)).alternate();
    let den = &vandermonde(m, n, Block::X) * &vandermonde(m, n, Block::Y);
    Ok(num.exact_div(&den)?)
}

fn t_monomial(m: usize, n: usize) -> Monomial {
    Monomial::new(vec![-1; m], vec![1; n])
}

/// `T(p) = p · (y_1…y_n)/(x_1…x_m)`.
pub fn shift_t_laurent(p: &LaurentPoly) -> LaurentPoly {
    let (m, n) = p.ambient();
    p.shift(&t_monomial(m, n))
}

/// Supercharacter substitution `y_j ↦ -y_j`.
pub fn omega_super(p: &LaurentPoly) -> LaurentPoly {
    p.negate_y()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "kac")]
    Kac,
    #[serde(rename = "euler")]
    Euler,
    #[serde(rename = "irr")]
    Irreducible,
}

impl Basis {
    pub fn kind(self) -> Kind {
        match self {
            Basis::Euler => Kind::Euler,
            Basis::Kac | Basis::Irreducible => Kind::Full,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Kac => "K",
            Basis::Euler => "E",
            Basis::Irreducible => "L",
        }
    }
}

/// A finite integer combination of Kac, Euler or irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharCombination {
    m: usize,
    n: usize,
    basis: Basis,
    terms: BTreeMap<Diagram, i64>,
}

impl CharCombination {
    pub fn zero(m: usize, n: usize, basis: Basis) -> Self {
        CharCombination {
            m,
            n,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, d: &Diagram, coeff: i64) -> Result<Self, CharError> {
        let mut c = Self::zero(d.m(), d.n(), basis);
        c.add_term(d, coeff)?;
        Ok(c)
    }

    pub fn from_terms<'a>(
        m: usize,
        n: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (&'a Diagram, i64)>,
    ) -> Result<Self, CharError> {
        let mut c = Self::zero(m, n, basis);
        for (d, k) in terms {
            c.add_term(d, k)?;
        }
        Ok(c)
    }

    /// Relabels `d` to the kind of the basis: Euler keys become Euler
    /// diagrams, Kac and irreducible keys must have full size.
    fn key(&self, d: &Diagram) -> Result<Diagram, CharError> {
        if (d.m(), d.n()) != (self.m, self.n) {
            return Err(DiagramError::AmbientMismatch(self.m, self.n, d.m(), d.n()).into());
        }
        Ok(match self.basis.kind() {
            Kind::Euler => d.as_euler(),
            Kind::Full => d.as_full()?,
        })
    }

    pub fn add_term(&mut self, d: &Diagram, coeff: i64) -> Result<(), CharError> {
        if coeff == 0 {
            return Ok(());
        }
        let key = self.key(d)?;
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry = entry.checked_add(coeff).ok_or(CharError::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, i64)> {
        self.terms.iter().map(|(d, c)| (d, *c))
    }

    pub fn coeff(&self, d: &Diagram) -> i64 {
        self.key(d)
            .ok()
            .and_then(|k| self.terms.get(&k).copied())
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn try_add(&self, other: &CharCombination) -> Result<CharCombination, CharError> {
        self.try_add_scaled(other, 1)
    }

    pub fn try_sub(&self, other: &CharCombination) -> Result<CharCombination, CharError> {
        self.try_add_scaled(other, -1)
    }

    /// `self + k·other`.
    pub fn try_add_scaled(&self, other: &CharCombination, k: i64) -> Result<Self, CharError> {
        if other.basis != self.basis {
            return Err(CharError::WrongBasis {
                expected: self.basis,
                got: other.basis,
            });
        }
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, c.checked_mul(k).ok_or(CharError::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Self, CharError> {
        Self::zero(self.m, self.n, self.basis).try_add_scaled(self, k)
    }

    /// Expands a Kac or Euler combination into a Laurent polynomial.
    /// Irreducible combinations are expanded by
    /// [`crate::decompose::irr_combination_to_laurent`].
    pub fn to_laurent(&self) -> Result<LaurentPoly, CharError> {
        let char_of = match self.basis {
            Basis::Kac => kac_char,
            Basis::Euler => euler_char,
            Basis::Irreducible => {
                return Err(CharError::WrongBasis {
                    expected: Basis::Euler,
                    got: Basis::Irreducible,
                })
            }
        };
        let mut out = LaurentPoly::zero(self.m, self.n);
        for (d, c) in self.terms() {
            out = &out + &char_of(d)?.scale(&BigInt::from(c));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> CombinationJson {
        CombinationJson {
            m: self.m,
            n: self.n,
            basis: self.basis,
            terms: self
                .terms()
                .map(|(d, c)| TermJson {
                    diagram: d.clone(),
                    coeff: c,
                })
                .collect(),
        }
    }

    pub fn from_json(json: &CombinationJson) -> Result<Self, CharError> {
        Self::from_terms(
            json.m,
            json.n,
            json.basis,
            json.terms.iter().map(|t| (&t.diagram, t.coeff)),
        )
    }
}

impl std::fmt::Display for CharCombination {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{}{}", self.basis.symbol(), d)?;
        }
        Ok(())
    }
}

/// `{"basis":"kac|euler|irr","terms":[{"diagram":{..},"coeff":int}]}`, with
/// the ambient carried alongside so that empty combinations round-trip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationJson {
    pub m: usize,
    pub n: usize,
    pub basis: Basis,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub diagram: Diagram,
    pub coeff: i64,
}

impl Serialize for CharCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharCombination {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = CombinationJson::deserialize(d)?;
        CharCombination::from_json(&json).map_err(serde::de::Error::custom)
    }
}

/// Drops Kac terms whose diagram is not partially polynomial.
pub fn filter_partially_polynomial(c: &CharCombination) -> Result<CharCombination, CharError> {
    if c.basis != Basis::Kac {
        return Err(CharError::WrongBasis {
            expected: Basis::Kac,
            got: c.basis,
        });
    }
    let (m, n) = c.ambient();
    CharCombination::from_terms(
        m,
        n,
        Basis::Kac,
        c.terms().filter(|(d, _)| d.is_partially_polynomial()),
    )
}

/// The Euler diagram `(B, B)` of `gl(k|k)`, written `E(B)`.
pub fn atypical_euler(k: usize, b: &[i64]) -> Result<Diagram, CharError> {
    Ok(Diagram::atypical(k, k, Kind::Euler, b.iter().copied())?)
}

fn atypical_key(d: &Diagram) -> Result<Vec<i64>, CharError> {
    if d.a() != d.b() || d.a().iter().any(|&x| x > 0) {
        return Err(CharError::NotMaximallyAtypical(d.clone()));
    }
    Ok(d.a().iter().copied().collect())
}

/// `T` on the Euler basis of the principal block of `gl(n|n)`:
/// `T E(B) = (-1)^{n+p} [E(ωB) - (-1)^p E({0} ∪ ωB)]`, `p = |B|`, where `ω`
/// shifts every element down by one and terms with more than `n` crosses are
/// dropped.
pub fn shift_t_euler(c: &CharCombination) -> Result<CharCombination, CharError> {
    if c.basis != Basis::Euler {
        return Err(CharError::WrongBasis {
            expected: Basis::Euler,
            got: c.basis,
        });
    }
    let (m, n) = c.ambient();
    let mut out = CharCombination::zero(m, n, Basis::Euler);
    for (d, coeff) in c.terms() {
        let b = atypical_key(d)?;
        let p = b.len();
        let shifted: Vec<i64> = b.iter().map(|x| x - 1).collect();
        let sign = if (n + p) % 2 == 0 { 1 } else { -1 };
        out.add_term(&atypical_euler(n, &shifted)?, sign * coeff)?;
        if p < n {
            let mut grown = shifted;
            grown.push(0);
            let inner = if p % 2 == 0 { 1 } else { -1 };
            out.add_term(&atypical_euler(n, &grown)?, -sign * inner * coeff)?;
        }
    }
    Ok(out)
}

/// Parameters of the graph `Γ_{n,m}`: vertices `[1-n-m, 0]`, an edge between
/// any two vertices of `[1-n, 0]` and between every vertex of `[1-n, 0]` and
/// every vertex of `[1-n-m, -n]`. `n = -1` stands for the empty graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaGraphParams {
    pub n: i64,
    pub m: i64,
}

impl GammaGraphParams {
    pub fn new(n: i64, m: i64) -> Result<Self, CharError> {
        if n < -1 || m < 1 {
            return Err(CharError::InvalidGraph { n, m });
        }
        Ok(GammaGraphParams { n, m })
    }

    pub fn vertices(&self) -> Vec<i64> {
        if self.n < 0 {
            return vec![];
        }
        (1 - self.n - self.m..=0).rev().collect()
    }

    pub fn edges(&self) -> Vec<(i64, i64)> {
        if self.n < 0 {
            return vec![];
        }
        let top: Vec<i64> = (1 - self.n..=0).rev().collect();
        let bottom: Vec<i64> = (1 - self.n - self.m..=-self.n).rev().collect();
        let mut edges = vec![];
        for (i, &u) in top.iter().enumerate() {
            for &v in &top[i + 1..] {
                edges.push((u, v));
            }
        }
        for &u in &top {
            for &v in &bottom {
                edges.push((u, v));
            }
        }
        edges
    }
}

fn parity_sign(i: i64) -> i64 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `χ(Γ) = E(∅) - Σ_v ε(v) E(v) - Σ_e ε(e) E(e)` with `ε({i}) = (-1)^i` and
/// `ε(e)` the product over its endpoints, in the Euler basis of
/// `gl(rank|rank)`. Terms with more than `rank` crosses vanish and are
/// dropped.
pub fn chi_gamma(params: GammaGraphParams, rank: usize) -> Result<CharCombination, CharError> {
    let mut out = CharCombination::zero(rank, rank, Basis::Euler);
    out.add_term(&atypical_euler(rank, &[])?, 1)?;
    if rank >= 1 {
        for v in params.vertices() {
            out.add_term(&atypical_euler(rank, &[v])?, -parity_sign(v))?;
        }
    }
    if rank >= 2 {
        for (u, v) in params.edges() {
            out.add_term(
                &atypical_euler(rank, &[u, v])?,
                -parity_sign(u) * parity_sign(v),
            )?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(m: usize, n: usize, terms: &[(&[i64], &[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            m,
            n,
            terms
                .iter()
                .map(|(x, y, c)| (x.to_vec(), y.to_vec(), *c)),
        )
        .unwrap()
    }

    fn e(b: &[i64]) -> Diagram {
        atypical_euler(2, b).unwrap()
    }

    fn combo(terms: &[(&[i64], i64)]) -> CharCombination {
        let ds: Vec<(Diagram, i64)> = terms.iter().map(|(b, c)| (e(b), *c)).collect();
        CharCombination::from_terms(2, 2, Basis::Euler, ds.iter().map(|(d, c)| (d, *c))).unwrap()
    }

    #[test]
    fn weyl_factor_examples() {
        let (dx, _, _) = weyl_factors(1, 0);
        assert_eq!(dx, LaurentPoly::one(1, 0));
        let (_, _, dxy) = weyl_factors(1, 1);
        assert_eq!(dxy, poly(1, 1, &[(&[0], &[0], 1), (&[-1], &[1], 1)]));
        let (dx, _, _) = weyl_factors(2, 0);
        assert_eq!(dx, poly(2, 0, &[(&[0, 0], &[], 1), (&[-1, 1], &[], -1)]));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&[0, 0], Block::X, 2, 0).unwrap(), LaurentPoly::one(2, 0));
        assert_eq!(
            schur(&[1, 0], Block::X, 2, 0).unwrap(),
            poly(2, 0, &[(&[1, 0], &[], 1), (&[0, 1], &[], 1)])
        );
        assert_eq!(
            schur(&[1, 1], Block::X, 2, 0).unwrap(),
            poly(2, 0, &[(&[1, 1], &[], 1)])
        );
        assert_eq!(
            schur(&[0, -1], Block::Y, 0, 2).unwrap(),
            poly(0, 2, &[(&[], &[-1, 0], 1), (&[], &[0, -1], 1)])
        );
        assert!(matches!(
            schur(&[0, 1], Block::X, 2, 0),
            Err(CharError::NotDominant(_))
        ));
    }

    #[test]
    fn kac_char_examples() {
        let f = Diagram::atypical(1, 1, Kind::Full, [0]).unwrap();
        assert_eq!(
            kac_char(&f).unwrap(),
            poly(1, 1, &[(&[0], &[0], 1), (&[-1], &[1], 1)])
        );
        let f = Diagram::atypical(2, 2, Kind::Full, [0, -1]).unwrap();
        assert_eq!(kac_char(&f).unwrap(), weyl_factors(2, 2).2);
        assert!(kac_char(&e(&[])).is_err());
    }

    #[test]
    fn euler_char_examples() {
        let g = Diagram::euler(1, 1, [], []).unwrap();
        assert_eq!(euler_char(&g).unwrap(), LaurentPoly::one(1, 1));
        let f = Diagram::full(2, 2, [2, -1], [0, -3]).unwrap();
        assert_eq!(euler_char(&f.as_euler()).unwrap(), kac_char(&f).unwrap());
        assert!(euler_char(&e(&[])).unwrap().is_supersymmetric());
        assert!(euler_char(&e(&[-1])).unwrap().is_supersymmetric());
    }

    #[test]
    fn shift_t_laurent_examples() {
        let one = LaurentPoly::one(2, 2);
        let t = shift_t_laurent(&one);
        assert_eq!(t, LaurentPoly::monomial(vec![-1, -1], vec![1, 1]));
        assert_eq!(
            shift_t_laurent(&t),
            LaurentPoly::monomial(vec![-2, -2], vec![2, 2])
        );
        let f = Diagram::atypical(2, 2, Kind::Full, [0, -2]).unwrap();
        let wf = Diagram::atypical(2, 2, Kind::Full, [-1, -3]).unwrap();
        assert_eq!(
            shift_t_laurent(&kac_char(&f).unwrap()),
            kac_char(&wf).unwrap()
        );
    }

    #[test]
    fn shift_t_euler_examples() {
        assert_eq!(
            shift_t_euler(&combo(&[(&[], 1)])).unwrap(),
            combo(&[(&[], 1), (&[0], -1)])
        );
        assert_eq!(
            shift_t_euler(&combo(&[(&[-2], 1)])).unwrap(),
            combo(&[(&[-3], -1), (&[0, -3], -1)])
        );
        assert_eq!(
            shift_t_euler(&combo(&[(&[-1, -2], 1)])).unwrap(),
            combo(&[(&[-2, -3], 1)])
        );
        let bad = CharCombination::single(
            Basis::Euler,
            &Diagram::euler(2, 2, [0], [-1]).unwrap(),
            1,
        )
        .unwrap();
        assert!(matches!(
            shift_t_euler(&bad),
            Err(CharError::NotMaximallyAtypical(_))
        ));
    }

    #[test]
    fn chi_gamma_examples() {
        let g = |n, m| chi_gamma(GammaGraphParams::new(n, m).unwrap(), 2).unwrap();
        assert_eq!(g(-1, 3), combo(&[(&[], 1)]));
        assert_eq!(g(0, 2), combo(&[(&[], 1), (&[0], -1), (&[-1], 1)]));
        assert_eq!(
            g(2, 1),
            combo(&[
                (&[], 1),
                (&[0], -1),
                (&[-1], 1),
                (&[-2], -1),
                (&[0, -1], 1),
                (&[0, -2], -1),
                (&[-1, -2], 1),
            ])
        );
        assert!(GammaGraphParams::new(-2, 1).is_err());
        assert!(GammaGraphParams::new(0, 0).is_err());
    }

    #[test]
    fn omega_super_examples() {
        assert_eq!(omega_super(&LaurentPoly::one(1, 1)), LaurentPoly::one(1, 1));
        let y = LaurentPoly::y_pow(1, 1, 0, 1);
        assert_eq!(omega_super(&y), -&y);
    }

    #[test]
    fn filter_examples() {
        let empty = CharCombination::zero(2, 2, Basis::Kac);
        assert_eq!(filter_partially_polynomial(&empty).unwrap(), empty);
        let pp = Diagram::atypical(2, 2, Kind::Full, [0, -1]).unwrap();
        let not_pp = Diagram::atypical(2, 2, Kind::Full, [1, -1]).unwrap();
        let c = CharCombination::from_terms(2, 2, Basis::Kac, [(&pp, 1), (&not_pp, 3)]).unwrap();
        let filtered = filter_partially_polynomial(&c).unwrap();
        assert_eq!(filtered.len(), 1);
        assert_eq!(filtered.coeff(&pp), 1);
        let only_pp = CharCombination::single(Basis::Kac, &pp, 2).unwrap();
        assert_eq!(filter_partially_polynomial(&only_pp).unwrap(), only_pp);
    }

    #[test]
    fn combination_arithmetic() {
        let a = combo(&[(&[], 1), (&[0], 2)]);
        let b = combo(&[(&[0], -2), (&[-1], 1)]);
        assert_eq!(a.try_add(&b).unwrap(), combo(&[(&[], 1), (&[-1], 1)]));
        assert!(a.try_sub(&a).unwrap().is_empty());
        assert_eq!(a.scale(-1).unwrap().coeff(&e(&[0])), -2);
        let kac = CharCombination::zero(2, 2, Basis::Kac);
        assert!(matches!(a.try_add(&kac), Err(CharError::WrongBasis { .. })));
    }

    #[test]
    fn combination_json() {
        let c = combo(&[(&[], 1), (&[0], -1)]);
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.starts_with(r#"{"m":2,"n":2,"basis":"euler","terms":[{"diagram":"#));
        let back: CharCombination = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert_eq!(c.to_string(), "E({},{}) - E({0},{0})");
    }
}
