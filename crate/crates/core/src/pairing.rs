//! The canonical bilinear form on the Grothendieck ring.
//!
//! [`pair_oracle`] evaluates the constant-term integral directly. The other
//! functions are the closed combinatorial formulas for pairs of basis
//! characters; the test suites check them against the oracle.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::characters::{kac_char, weyl_factors, Basis, CharCombination, CharError};
use crate::decompose::proj_flag;
use crate::diagrams::{eps_sign, Diagram, DiagramError, Kind};
use crate::laurent::{LaurentError, LaurentPoly, Monomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairingError {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("raw constant term {raw} is not divisible by {divisor}")]
    DivisibilityViolation { raw: BigInt, divisor: BigInt },
    #[error("truncation order {order} gives {low}, order {high_order} gives {high}")]
    TruncationUnstable {
        order: u32,
        high_order: u32,
        low: BigInt,
        high: BigInt,
    },
    #[error(transparent)]
    Char(#[from] CharError),
    #[error("flag of P({f}) meets E({h}) in more than one Kac module")]
    Inconsistent { f: Diagram, h: Diagram },
}

/// Details of one oracle evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub value: BigInt,
    /// Constant term before division by `m! n!`.
    pub raw: BigInt,
    pub divisor: BigInt,
    /// Largest exponent kept in each series factor.
    pub order: u32,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Coefficients of `x^{-a} y^{-b}` in `∏_{i,j} (1 + y_j/x_i)^{-2}`, with
/// every factor truncated at `(y_j/x_i)^order`.
///
/// The coefficient is a sum over `m × n` tables of non-negative integers
/// `k_ij ≤ order` with row sums `a_i` and column sums `-b_j` of
/// `∏ (-1)^{k_ij} (k_ij + 1)`.
struct SeriesCoefficients {
    order: u32,
    cache: HashMap<Monomial, BigInt>,
}

impl SeriesCoefficients {
    fn new(order: u32) -> Self {
        SeriesCoefficients {
            order,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, mono: &Monomial) -> BigInt {
        if let Some(c) = self.cache.get(mono) {
            return c.clone();
        }
        let c = self.compute(mono);
        self.cache.insert(mono.clone(), c.clone());
        c
    }

    fn compute(&self, mono: &Monomial) -> BigInt {
        let rows = &mono.x;
        let cols: Vec<i64> = mono.y.iter().map(|e| -e).collect();
        if rows.iter().chain(&cols).any(|&e| e < 0)
            || rows.iter().sum::<i64>() != cols.iter().sum::<i64>()
        {
            return BigInt::zero();
        }
        if rows.is_empty() || cols.is_empty() {
            return BigInt::one();
        }
        let mut memo = HashMap::new();
        self.fill_rows(rows, 0, cols, &mut memo)
    }

    fn fill_rows(
        &self,
        rows: &[i64],
        i: usize,
        cols: Vec<i64>,
        memo: &mut HashMap<(usize, Vec<i64>), BigInt>,
    ) -> BigInt {
        if i == rows.len() {
            return if cols.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        if let Some(v) = memo.get(&(i, cols.clone())) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let mut cols_left = cols.clone();
        self.fill_row(rows, i, 0, rows[i], &mut cols_left, BigInt::one(), &mut total, memo);
        memo.insert((i, cols), total.clone());
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_row(
        &self,
        rows: &[i64],
        i: usize,
        j: usize,
        remaining: i64,
        cols: &mut Vec<i64>,
        weight: BigInt,
        total: &mut BigInt,
        memo: &mut HashMap<(usize, Vec<i64>), BigInt>,
    ) {
        let last = j + 1 == cols.len();
        let hi = remaining.min(cols[j]).min(self.order as i64);
        let lo = if last { remaining } else { 0 };
        if lo > hi {
            return;
        }
        for k in lo..=hi {
            let term = if k % 2 == 0 { k + 1 } else { -(k + 1) };
            let w = &weight * BigInt::from(term);
            cols[j] -= k;
            if last {
                *total += w * self.fill_rows(rows, i + 1, cols.clone(), memo);
            } else {
                self.fill_row(rows, i, j + 1, remaining - k, cols, w, total, memo);
            }
            cols[j] += k;
        }
    }
}

/// The polynomial part `p* q Δ(x)Δ(x)* Δ(y)Δ(y)* (y_1…y_n)^m / (x_1…x_m)^n`
/// of the integrand.
fn integrand(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly, PairingError> {
    let (m, n) = p.ambient();
    let (dx, dy, _) = weyl_factors(m, n);
    let weyl = &(&dx * &dx.star()) * &(&dy * &dy.star());
    let body = p.star().try_mul(q)?;
    let prefactor = Monomial::new(vec![-(n as i64); m], vec![m as i64; n]);
    Ok((&body * &weyl).shift(&prefactor))
}

fn raw_constant_term(poly: &LaurentPoly, order: u32) -> BigInt {
    let mut series = SeriesCoefficients::new(order);
    let mut raw = BigInt::zero();
    for (mono, c) in poly.terms() {
        let s = series.get(mono);
        if !s.is_zero() {
            raw += c * s;
        }
    }
    raw
}

/// Evaluates `(p, q)` by constant-term extraction and reports the
/// intermediate quantities.
///
/// With `order = None` every series factor is expanded up to the largest
/// `x`-exponent of the polynomial part, which is exact: a table entry can
/// never exceed its row sum. An explicit order is checked against
/// `order + 5`.
pub fn pair_oracle_report(
    p: &LaurentPoly,
    q: &LaurentPoly,
    order: Option<u32>,
) -> Result<OracleReport, PairingError> {
    let (m, n) = p.ambient();
    let poly = integrand(p, q)?;
    let divisor = factorial(m) * factorial(n);
    let natural = poly
        .max_x_exponent()
        .unwrap_or(0)
        .max(0)
        .to_u32()
        .unwrap_or(u32::MAX);
    let used = order.unwrap_or(natural);
    let raw = raw_constant_term(&poly, used);
    if let Some(order) = order {
        let high_order = order.saturating_add(5);
        let high = raw_constant_term(&poly, high_order);
        if high != raw {
            return Err(PairingError::TruncationUnstable {
                order,
                high_order,
                low: raw,
                high,
            });
        }
    }
    let (value, rem) = raw.div_rem(&divisor);
    if !rem.is_zero() {
        return Err(PairingError::DivisibilityViolation { raw, divisor });
    }
    Ok(OracleReport {
        value,
        raw,
        divisor,
        order: used,
    })
}

pub fn pair_oracle(
    p: &LaurentPoly,
    q: &LaurentPoly,
    order: Option<u32>,
) -> Result<BigInt, PairingError> {
    Ok(pair_oracle_report(p, q, order)?.value)
}

/// `(K(f), K(g)) = δ_{f,g}`.
pub fn pair_kac_kac(f: &Diagram, g: &Diagram) -> Result<i64, PairingError> {
    f.require_kind(Kind::Full)?;
    g.require_kind(Kind::Full)?;
    f.same_ambient(g)?;
    Ok(i64::from(f == g))
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(K(f), E(g))`: nonzero exactly when `f = g*C` for a set `C` of circles of
/// `g` with `C ≤ n - m`, and then equal to
/// `(-1)^{r(r-1)/2 + m(m-1)/2 + s(m-r) + ΣC} ε(A,C) ε(C,B)`.
pub fn pair_kac_euler(f: &Diagram, g: &Diagram) -> Result<i64, PairingError> {
    f.require_kind(Kind::Full)?;
    g.same_ambient(f)?;
    let g = g.as_euler();
    let (af, bf) = (f.a(), f.b());
    let (ag, bg) = (g.a(), g.b());
    if !ag.is_subset(af) || !bg.is_subset(bf) {
        return Ok(0);
    }
    let c: std::collections::BTreeSet<i64> = af.difference(ag).copied().collect();
    let c_b: std::collections::BTreeSet<i64> = bf.difference(bg).copied().collect();
    if c != c_b || c.iter().any(|x| ag.contains(x) || bg.contains(x)) {
        return Ok(0);
    }
    if c.iter().any(|&x| x > g.pp_bound()) {
        return Ok(0);
    }
    let (m, (r, s)) = (f.m() as i64, g.rank());
    let (r, s) = (r as i64, s as i64);
    let exponent = r * (r - 1) / 2 + m * (m - 1) / 2 + s * (m - r) + c.iter().sum::<i64>();
    Ok(sign(exponent) * eps_sign(ag, &c)? * eps_sign(&c, bg)?)
}

/// `(P(f), K(g))`: 1 if `K(g)` occurs in the Kac flag of `P(f)`, else 0.
pub fn pair_proj_kac(f: &Diagram, g: &Diagram) -> Result<i64, PairingError> {
    g.require_kind(Kind::Full)?;
    f.same_ambient(g)?;
    Ok(i64::from(proj_flag(f)?.contains(g)))
}

/// `(P(f), E(h))` via the unique Kac module `K(h*A)` of the flag of `P(f)`
/// that can pair with `E(h)`, where `A` runs over subsets of crosses of `f`
/// with partner above `n - m` that lie at or below `n - m`.
pub fn pair_proj_euler(f: &Diagram, h: &Diagram) -> Result<i64, PairingError> {
    f.require_kind(Kind::Full)?;
    h.same_ambient(f)?;
    let h = h.as_euler();
    let bound = f.pp_bound();
    let (_, f1) = f.cross_split();
    let candidates: Vec<i64> = f1
        .into_iter()
        .filter(|&a| a <= bound && h.is_circle(a))
        .collect();
    let k = f.m() - h.rank().0;
    if k > candidates.len() {
        return Ok(0);
    }
    let flag = proj_flag(f)?;
    let mut found = None;
    for a in candidates.into_iter().combinations(k) {
        let g = h.star_add(&a)?;
        if flag.contains(&g) {
            if found.is_some() {
                return Err(PairingError::Inconsistent {
                    f: f.clone(),
                    h: h.clone(),
                });
            }
            found = Some(g);
        }
    }
    match found {
        Some(g) => pair_kac_euler(&g, &h),
        None => Ok(0),
    }
}

/// `(P(f), E(h))` as the sum of `(K(g), E(h))` over the Kac flag of `P(f)`.
pub fn pair_proj_euler_by_flag(f: &Diagram, h: &Diagram) -> Result<i64, PairingError> {
    let mut total = 0;
    for g in proj_flag(f)? {
        total += pair_kac_euler(&g, h)?;
    }
    Ok(total)
}

/// `(P(f), c)` for a combination in any basis; `(P(f), L(g)) = δ_{f,g}`.
pub fn pair_general(f: &Diagram, c: &CharCombination) -> Result<i64, PairingError> {
    f.require_kind(Kind::Full)?;
    let (m, n) = c.ambient();
    if (m, n) != (f.m(), f.n()) {
        return Err(DiagramError::AmbientMismatch(f.m(), f.n(), m, n).into());
    }
    let mut total = 0;
    for (d, coeff) in c.terms() {
        let v = match c.basis() {
            Basis::Kac => pair_proj_kac(f, d)?,
            Basis::Euler => pair_proj_euler(f, d)?,
            Basis::Irreducible => i64::from(f == d),
        };
        total += coeff * v;
    }
    Ok(total)
}

/// Kac characters of the flag of `P(f)` summed into one Laurent polynomial.
pub fn proj_char(f: &Diagram) -> Result<LaurentPoly, PairingError> {
    let mut out = LaurentPoly::zero(f.m(), f.n());
    for g in proj_flag(f)? {
        out = &out + &kac_char(&g)?;
    }
    Ok(out)
}
