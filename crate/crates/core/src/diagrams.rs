//! Weight diagrams: the pair of integer sets `(A, B)` attached to a highest
//! weight, the symbol function `Z → {×, ○, >, <}`, and the admissible
//! transposition calculus acting on them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("expected {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("|A|={r}, |B|={s} is not a valid diagram for gl({m}|{n})")]
    InvalidCardinality { m: usize, n: usize, r: usize, s: usize },
    #[error("{0} is not a cross")]
    NotACross(i64),
    #[error("{0} is not a circle")]
    NotACircle(i64),
    #[error("sets are not disjoint")]
    NotDisjoint,
    #[error("transposition needs a < b, got ({0}, {1})")]
    InvalidTransposition(i64, i64),
    #[error("expected a {0} diagram")]
    WrongKind(Kind),
    #[error("ambient mismatch: gl({0}|{1}) vs gl({2}|{3})")]
    AmbientMismatch(usize, usize, usize, usize),
    #[error("duplicate entries in {0:?}")]
    Duplicate(Vec<i64>),
}

/// Highest weight data: `lambda` (length m) and `mu` (length n), both
/// non-increasing. Also used for the `(tau, nu)` data of Euler weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
}

fn non_increasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

impl Weight {
    pub fn new(lambda: Vec<i64>, mu: Vec<i64>) -> Result<Self, DiagramError> {
        for part in [&lambda, &mu] {
            if !non_increasing(part) {
                return Err(DiagramError::NotDominant(part.clone()));
            }
        }
        Ok(Weight { lambda, mu })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Full,
    Euler,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Full => write!(f, "full"),
            Kind::Euler => write!(f, "euler"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Cross,
    Circle,
    Greater,
    Less,
}

impl Symbol {
    pub fn phi(self) -> i64 {
        match self {
            Symbol::Cross => 1,
            Symbol::Circle => -1,
            Symbol::Greater | Symbol::Less => 0,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Cross => 'x',
            Symbol::Circle => 'o',
            Symbol::Greater => '>',
            Symbol::Less => '<',
        }
    }
}

/// The transposition `π_a^b` of `Z`, with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: i64,
    b: i64,
}

impl Transposition {
    pub fn new(a: i64, b: i64) -> Result<Self, DiagramError> {
        if a >= b {
            return Err(DiagramError::InvalidTransposition(a, b));
        }
        Ok(Transposition { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn apply_to(&self, x: i64) -> i64 {
        if x == self.a {
            self.b
        } else if x == self.b {
            self.a
        } else {
            x
        }
    }
}

/// A weight diagram for `gl(m|n)`.
///
/// `Full` diagrams have `|A| = m`, `|B| = n`. `Euler` diagrams have
/// `|A| = r`, `|B| = s` with `r - s = m - n`; `(r, s) = (m, n)` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    m: usize,
    n: usize,
    kind: Kind,
    a: BTreeSet<i64>,
    b: BTreeSet<i64>,
}

fn to_set(v: impl IntoIterator<Item = i64>) -> Result<BTreeSet<i64>, DiagramError> {
    let v: Vec<i64> = v.into_iter().collect();
    let set: BTreeSet<i64> = v.iter().copied().collect();
    if set.len() != v.len() {
        return Err(DiagramError::Duplicate(v));
    }
    Ok(set)
}

impl Diagram {
    pub fn new(
        m: usize,
        n: usize,
        kind: Kind,
        a: impl IntoIterator<Item = i64>,
        b: impl IntoIterator<Item = i64>,
    ) -> Result<Self, DiagramError> {
        Self::from_sets(m, n, kind, to_set(a)?, to_set(b)?)
    }

    pub fn full(
        m: usize,
        n: usize,
        a: impl IntoIterator<Item = i64>,
        b: impl IntoIterator<Item = i64>,
    ) -> Result<Self, DiagramError> {
        Self::new(m, n, Kind::Full, a, b)
    }

    pub fn euler(
        m: usize,
        n: usize,
        a: impl IntoIterator<Item = i64>,
        b: impl IntoIterator<Item = i64>,
    ) -> Result<Self, DiagramError> {
        Self::new(m, n, Kind::Euler, a, b)
    }

    /// The maximally atypical diagram `(C, C)`.
    pub fn atypical(
        m: usize,
        n: usize,
        kind: Kind,
        crosses: impl IntoIterator<Item = i64>,
    ) -> Result<Self, DiagramError> {
        let c = to_set(crosses)?;
        Self::from_sets(m, n, kind, c.clone(), c)
    }

    fn from_sets(
        m: usize,
        n: usize,
        kind: Kind,
        a: BTreeSet<i64>,
        b: BTreeSet<i64>,
    ) -> Result<Self, DiagramError> {
        let (r, s) = (a.len(), b.len());
        let ok = match kind {
            Kind::Full => r == m && s == n,
            Kind::Euler => r <= m && s <= n && (r as i64 - s as i64) == (m as i64 - n as i64),
        };
        if !ok {
            return Err(DiagramError::InvalidCardinality { m, n, r, s });
        }
        Ok(Diagram { m, n, kind, a, b })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn a(&self) -> &BTreeSet<i64> {
        &self.a
    }

    pub fn b(&self) -> &BTreeSet<i64> {
        &self.b
    }

    /// `(r, s) = (|A|, |B|)`.
    pub fn rank(&self) -> (usize, usize) {
        (self.a.len(), self.b.len())
    }

    /// `n - m`, the threshold for partially polynomial positions.
    pub fn pp_bound(&self) -> i64 {
        self.n as i64 - self.m as i64
    }

    pub fn same_ambient(&self, other: &Diagram) -> Result<(), DiagramError> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(DiagramError::AmbientMismatch(
                self.m, self.n, other.m, other.n,
            ));
        }
        Ok(())
    }

    pub fn require_kind(&self, kind: Kind) -> Result<(), DiagramError> {
        if self.kind != kind {
            return Err(DiagramError::WrongKind(kind));
        }
        Ok(())
    }

    /// Same sets, relabelled as an Euler diagram.
    pub fn as_euler(&self) -> Diagram {
        Diagram {
            kind: Kind::Euler,
            ..self.clone()
        }
    }

    /// Same sets, relabelled as a full diagram when the sizes allow it.
    pub fn as_full(&self) -> Result<Diagram, DiagramError> {
        Self::from_sets(self.m, self.n, Kind::Full, self.a.clone(), self.b.clone())
    }

    pub fn symbol(&self, x: i64) -> Symbol {
        match (self.a.contains(&x), self.b.contains(&x)) {
            (true, true) => Symbol::Cross,
            (true, false) => Symbol::Greater,
            (false, true) => Symbol::Less,
            (false, false) => Symbol::Circle,
        }
    }

    pub fn crosses(&self) -> Vec<i64> {
        self.a.intersection(&self.b).copied().collect()
    }

    pub fn is_cross(&self, x: i64) -> bool {
        self.a.contains(&x) && self.b.contains(&x)
    }

    pub fn is_circle(&self, x: i64) -> bool {
        !self.a.contains(&x) && !self.b.contains(&x)
    }

    /// Positions carrying `>` or `<`.
    pub fn core(&self) -> (BTreeSet<i64>, BTreeSet<i64>) {
        (
            self.a.difference(&self.b).copied().collect(),
            self.b.difference(&self.a).copied().collect(),
        )
    }

    /// Smallest and largest non-circle position.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = self.a.iter().chain(&self.b).min()?;
        let hi = self.a.iter().chain(&self.b).max()?;
        Some((*lo, *hi))
    }

    /// All elements of `B` are at most `n - m`.
    pub fn is_partially_polynomial(&self) -> bool {
        self.b.iter().all(|&x| x <= self.pp_bound())
    }

    /// The unique `b > a` such that `π_a^b` is admissible.
    pub fn admissible_partner(&self, a: i64) -> Result<i64, DiagramError> {
        if !self.is_cross(a) {
            return Err(DiagramError::NotACross(a));
        }
        // circles are cofinite, so the running sum reaches zero
        let mut sum = 0;
        let mut b = a;
        loop {
            sum += self.symbol(b).phi();
            if sum == 0 {
                return Ok(b);
            }
            b += 1;
        }
    }

    /// For a cross `b`, the largest `a < b` such that `π_a^b` is admissible for
    /// `π_a^b(self)`: the nearest position a move onto `b` can start from.
    pub fn reverse_partner(&self, b: i64) -> Result<i64, DiagramError> {
        if !self.is_cross(b) {
            return Err(DiagramError::NotACross(b));
        }
        let mut sum = 0;
        let mut a = b;
        loop {
            sum += self.symbol(a).phi();
            if sum == 0 {
                return Ok(a);
            }
            a -= 1;
        }
    }

    pub fn is_admissible(&self, t: &Transposition) -> bool {
        self.admissible_partner(t.a)
            .map(|b| b == t.b)
            .unwrap_or(false)
    }

    /// Relabels positions `a ↔ b` in both `A` and `B`.
    pub fn apply(&self, t: &Transposition) -> Diagram {
        let relabel = |s: &BTreeSet<i64>| s.iter().map(|&x| t.apply_to(x)).collect();
        Diagram {
            a: relabel(&self.a),
            b: relabel(&self.b),
            ..self.clone()
        }
    }

    /// Applies the admissible transpositions `π_c`, `c ∈ C`, all computed for
    /// `self`. They commute, so the order is irrelevant.
    pub fn pi_c(&self, c: &[i64]) -> Result<Diagram, DiagramError> {
        let mut out = self.clone();
        for &x in c {
            let b = self.admissible_partner(x)?;
            out = out.apply(&Transposition::new(x, b)?);
        }
        Ok(out)
    }

    /// `h * C`: the circles in `C` become crosses.
    pub fn star_add(&self, c: &[i64]) -> Result<Diagram, DiagramError> {
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        for &x in c {
            if !self.is_circle(x) || !a.insert(x) || !b.insert(x) {
                return Err(DiagramError::NotACircle(x));
            }
        }
        let kind = if a.len() == self.m && b.len() == self.n {
            Kind::Full
        } else {
            Kind::Euler
        };
        Self::from_sets(self.m, self.n, kind, a, b)
    }

    /// `f_B`: the crosses in `B` become circles. The result is an Euler
    /// diagram unless nothing was removed.
    pub fn drop_crosses(&self, c: &[i64]) -> Result<Diagram, DiagramError> {
        if c.is_empty() {
            return Ok(self.clone());
        }
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        for &x in c {
            if !self.is_cross(x) || !a.remove(&x) || !b.remove(&x) {
                return Err(DiagramError::NotACross(x));
            }
        }
        Self::from_sets(self.m, self.n, Kind::Euler, a, b)
    }

    /// `f_{>d}`.
    pub fn truncate_above(&self, d: i64) -> Diagram {
        let above: Vec<i64> = self.crosses().into_iter().filter(|&x| x > d).collect();
        self.drop_crosses(&above).expect("crosses are crosses")
    }

    /// Splits the crosses by whether their admissible partner is `≤ n-m`
    /// (first) or `> n-m` (second).
    pub fn cross_split(&self) -> (Vec<i64>, Vec<i64>) {
        let bound = self.pp_bound();
        self.crosses().into_iter().partition(|&a| {
            self.admissible_partner(a).expect("cross") <= bound
        })
    }

    /// Text rendering of `[lo, hi]`: a symbol row and an index ruler.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        let width = (lo..=hi)
            .map(|i| i.to_string().len())
            .max()
            .unwrap_or(1);
        let mut symbols = String::new();
        let mut ruler = String::new();
        for i in lo..=hi {
            symbols.push_str(&format!("{:>width$} ", self.symbol(i).as_char()));
            ruler.push_str(&format!("{:>width$} ", i));
        }
        format!("{}\n{}\n", symbols.trim_end(), ruler.trim_end())
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            m: self.m,
            n: self.n,
            a: self.a.iter().rev().copied().collect(),
            b: self.b.iter().rev().copied().collect(),
            kind: self.kind,
        }
    }

    pub fn from_json(json: &DiagramJson) -> Result<Self, DiagramError> {
        Self::new(
            json.m,
            json.n,
            json.kind,
            json.a.iter().copied(),
            json.b.iter().copied(),
        )
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<i64>| {
            s.iter()
                .rev()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({{{}}},{{{}}})", list(&self.a), list(&self.b))
    }
}

/// JSON form `{"m":..,"n":..,"A":[..],"B":[..],"kind":"full"|"euler"}`, sets
/// listed in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<i64>,
    #[serde(rename = "B")]
    pub b: Vec<i64>,
    pub kind: Kind,
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = DiagramJson::deserialize(d)?;
        Diagram::from_json(&json).map_err(serde::de::Error::custom)
    }
}

/// `A = {λ_i + 1 - i}`, `B = {j - r - μ_j}` where `r = |λ|`.
fn sets_from_weight(lambda: &[i64], mu: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let r = lambda.len() as i64;
    let a = lambda
        .iter()
        .enumerate()
        .map(|(i, l)| l - i as i64)
        .collect();
    let b = mu
        .iter()
        .enumerate()
        .map(|(j, u)| (j as i64 + 1) - r - u)
        .collect();
    (a, b)
}

pub fn weight_to_diagram(w: &Weight, m: usize, n: usize) -> Result<Diagram, DiagramError> {
    for (part, len) in [(&w.lambda, m), (&w.mu, n)] {
        if part.len() != len {
            return Err(DiagramError::WrongLength {
                expected: len,
                got: part.len(),
            });
        }
        if !non_increasing(part) {
            return Err(DiagramError::NotDominant(part.clone()));
        }
    }
    let (a, b) = sets_from_weight(&w.lambda, &w.mu);
    Diagram::full(m, n, a, b)
}

pub fn euler_weight_to_diagram(
    tau: &[i64],
    nu: &[i64],
    m: usize,
    n: usize,
) -> Result<Diagram, DiagramError> {
    for part in [tau, nu] {
        if !non_increasing(part) {
            return Err(DiagramError::NotDominant(part.to_vec()));
        }
    }
    let (a, b) = sets_from_weight(tau, nu);
    Diagram::euler(m, n, a, b)
}

/// Inverse of [`weight_to_diagram`] (and of [`euler_weight_to_diagram`] for
/// Euler diagrams, where the lengths are `(r, s)`).
pub fn diagram_to_weight(f: &Diagram) -> Weight {
    let r = f.a.len() as i64;
    let lambda = f
        .a
        .iter()
        .rev()
        .enumerate()
        .map(|(i, x)| x + i as i64)
        .collect();
    let mu = f
        .b
        .iter()
        .enumerate()
        .map(|(j, x)| (j as i64 + 1) - r - x)
        .collect();
    Weight { lambda, mu }
}

/// Sign of the permutation that sorts `(X desc, Y desc)` into decreasing
/// order of `X ∪ Y`.
pub fn eps_sign(x: &BTreeSet<i64>, y: &BTreeSet<i64>) -> Result<i64, DiagramError> {
    if !x.is_disjoint(y) {
        return Err(DiagramError::NotDisjoint);
    }
    let seq: Vec<i64> = x.iter().rev().chain(y.iter().rev()).copied().collect();
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] < seq[j] {
                inversions += 1;
            }
        }
    }
    Ok(if inversions.is_multiple_of(2) { 1 } else { -1 })
}
