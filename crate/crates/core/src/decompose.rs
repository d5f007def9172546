//! Kac flags of projective covers, Kac constituents, Euler supports and the
//! change of basis between Euler and irreducible characters.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::characters::{
    chi_gamma, Basis, CharCombination, CharError, GammaGraphParams,
};
use crate::diagrams::{Diagram, DiagramError, Kind, Transposition};
use crate::laurent::LaurentPoly;
use crate::pairing::{pair_kac_euler, pair_proj_euler, PairingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error("{0} is not partially polynomial")]
    NotPartiallyPolynomial(Diagram),
    #[error("window starting at {lo} is too small")]
    WindowTooSmall { lo: i64 },
    #[error("diagonal entry (P({f}), E({h})) = {value} is not a unit")]
    NonUnitriangular { f: Diagram, h: Diagram, value: i64 },
    #[error("E({h}) has {count} leading irreducible constituents, expected one")]
    Lead { h: Diagram, count: usize },
    #[error("window has {fulls} irreducibles but {eulers} Euler characters")]
    BlockMismatch { fulls: usize, eulers: usize },
    #[error("coefficient of E({0}) is not an integer")]
    NonIntegral(Diagram),
    #[error("singular pairing matrix")]
    Singular,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// `𝒫(f) = {π_C(f) : C ⊆ f^{-1}(×)}`, the Kac flag of `P(f)`.
pub fn proj_flag(f: &Diagram) -> Result<BTreeSet<Diagram>, DiagramError> {
    f.require_kind(Kind::Full)?;
    let crosses = f.crosses();
    let mut out = BTreeSet::new();
    for c in crosses.iter().copied().powerset() {
        out.insert(f.pi_c(&c)?);
    }
    Ok(out)
}

struct MoveLog {
    cs: BTreeSet<i64>,
    ds: BTreeSet<i64>,
}

impl MoveLog {
    fn new() -> Self {
        MoveLog {
            cs: BTreeSet::new(),
            ds: BTreeSet::new(),
        }
    }
}

/// Moves the cross at `d` to the circle `c < d`, keeping the move only when
/// `π_c^d` is admissible for the result.
fn inverse_move(cur: &Diagram, c: i64, d: i64) -> Option<Diagram> {
    if !cur.is_circle(c) {
        return None;
    }
    let next = cur.apply(&Transposition::new(c, d).ok()?);
    match next.admissible_partner(c) {
        Ok(b) if b == d => Some(next),
        _ => None,
    }
}

fn constituents_dfs(
    cur: &Diagram,
    last_c: Option<i64>,
    k: i64,
    log: &mut MoveLog,
    out: &mut BTreeSet<Diagram>,
) {
    out.insert(cur.clone());
    for d in cur.crosses() {
        if log.cs.contains(&d) {
            continue;
        }
        let top = last_c.map_or(d - 1, |l| (l - 1).min(d - 1));
        // An admissible interval is balanced, so it spans at most 2k
        // positions that are not `>` or `<`.
        for c in (step_free(cur, d, 1 - 2 * k)..=top).rev() {
            if log.ds.contains(&c) {
                continue;
            }
            if let Some(next) = inverse_move(cur, c, d) {
                log.cs.insert(c);
                let fresh_d = log.ds.insert(d);
                constituents_dfs(&next, Some(c), k, log, out);
                log.cs.remove(&c);
                if fresh_d {
                    log.ds.remove(&d);
                }
            }
        }
    }
}

/// The position reached from `x` after `steps` moves (signed) that skip the
/// `>` and `<` positions of `g`.
fn step_free(g: &Diagram, x: i64, steps: i64) -> i64 {
    let (gt, lt) = g.core();
    let dir = steps.signum();
    let mut pos = x;
    for _ in 0..steps.abs() {
        pos += dir;
        while gt.contains(&pos) || lt.contains(&pos) {
            pos += dir;
        }
    }
    pos
}

/// `𝒦(g) = {f : g ∈ 𝒫(f)}`, the irreducible constituents of `K(g)`, found by
/// searching sequences of inverse admissible moves `π_{c_i}^{d_i}` with
/// strictly decreasing `c_i` and no `c_i` equal to any `d_j`.
pub fn kac_constituents(g: &Diagram) -> Result<BTreeSet<Diagram>, DiagramError> {
    g.require_kind(Kind::Full)?;
    let k = g.crosses().len() as i64;
    let mut out = BTreeSet::new();
    constituents_dfs(g, None, k, &mut MoveLog::new(), &mut out);
    Ok(out)
}

/// The diagrams with the same `>`/`<` positions as `g` and `k` crosses placed
/// in `[lo, hi]`.
fn block_members(g: &Diagram, kind: Kind, p: usize, lo: i64, hi: i64) -> Vec<Diagram> {
    let (gt, lt) = g.core();
    let free: Vec<i64> = (lo..=hi)
        .filter(|x| !gt.contains(x) && !lt.contains(x))
        .collect();
    free.into_iter()
        .combinations(p)
        .filter_map(|c| {
            Diagram::new(
                g.m(),
                g.n(),
                kind,
                gt.iter().copied().chain(c.iter().copied()),
                lt.iter().copied().chain(c.iter().copied()),
            )
            .ok()
        })
        .collect()
}

/// `𝒦(g)` by brute force: every `f` of the block of `g` with crosses in
/// `[lo, hi]` such that `g ∈ 𝒫(f)`.
pub fn kac_constituents_in_window(
    g: &Diagram,
    lo: i64,
    hi: i64,
) -> Result<BTreeSet<Diagram>, DiagramError> {
    g.require_kind(Kind::Full)?;
    let k = g.crosses().len();
    let mut out = BTreeSet::new();
    for f in block_members(g, Kind::Full, k, lo, hi) {
        if proj_flag(&f)?.contains(g) {
            out.insert(f);
        }
    }
    Ok(out)
}

/// The window around the crosses of `g` reaching `2k + 1` free positions
/// below the lowest cross and `k` above the highest, where free means
/// neither `>` nor `<`.
pub fn default_constituent_window(g: &Diagram) -> (i64, i64) {
    let crosses = g.crosses();
    let k = crosses.len() as i64;
    match (crosses.first(), crosses.last()) {
        (Some(&lo), Some(&hi)) => (step_free(g, lo, -2 * k - 1), step_free(g, hi, k)),
        _ => (0, 0),
    }
}

/// `ℰ(f)` with coefficients: every Euler diagram `h` with
/// `(P(f), E(h)) ≠ 0`, obtained as `h = g_A` for `g ∈ 𝒫(f)` and `A` a set of
/// crosses of `g` that are crosses of `f` with partner above `n - m` and lie
/// at or below `n - m`.
pub fn euler_support(f: &Diagram) -> Result<BTreeMap<Diagram, i64>, DecomposeError> {
    let (_, f1) = f.cross_split();
    let bound = f.pp_bound();
    let mut out = BTreeMap::new();
    for g in proj_flag(f)? {
        let droppable: Vec<i64> = f1
            .iter()
            .copied()
            .filter(|&a| a <= bound && g.is_cross(a))
            .collect();
        for a in droppable.into_iter().powerset() {
            let h = g.drop_crosses(&a)?.as_euler();
            let coeff = pair_kac_euler(&g, &h)?;
            if coeff == 0 {
                continue;
            }
            if let Some(prev) = out.insert(h.clone(), coeff) {
                if prev != coeff {
                    return Err(PairingError::Inconsistent { f: f.clone(), h }.into());
                }
            }
        }
    }
    Ok(out)
}

/// `ℰ⁺(f) = {π_C(f)_{>n-m} : C ⊆ f^{-1}(×)}` for partially polynomial `f`.
pub fn euler_support_pp(f: &Diagram) -> Result<BTreeSet<Diagram>, DecomposeError> {
    if !f.is_partially_polynomial() {
        return Err(DecomposeError::NotPartiallyPolynomial(f.clone()));
    }
    let bound = f.pp_bound();
    Ok(proj_flag(f)?
        .into_iter()
        .map(|g| g.truncate_above(bound).as_euler())
        .collect())
}

/// Number of crosses of a full diagram in the block of `h`.
fn block_atypicality(h: &Diagram) -> usize {
    h.m() - h.core().0.len()
}

/// Default left end of the scan in [`euler_to_irr`]: `2k + 1` free positions
/// below `n - m + 1`.
pub fn default_euler_window(h: &Diagram) -> i64 {
    step_free(h, h.pp_bound() + 1, -2 * block_atypicality(h) as i64 - 1)
}

/// `ch E(h) = Σ_f b_{f,h} ch L(f)` with `b_{f,h} = (P(f), E(h))`.
///
/// Candidates `f` are the constituents of the Kac modules `K(h*A)` with `A`
/// a set of circles of `h` in `[lo, n - m]`; a nonzero coefficient coming from
/// a set containing the lowest of these circles raises `WindowTooSmall`.
pub fn euler_to_irr(h: &Diagram, lo: Option<i64>) -> Result<CharCombination, DecomposeError> {
    if !h.is_partially_polynomial() {
        return Err(DecomposeError::NotPartiallyPolynomial(h.clone()));
    }
    let h = h.as_euler();
    let bound = h.pp_bound();
    let lo = lo.unwrap_or_else(|| default_euler_window(&h));
    let k = h.m() - h.rank().0;
    let circles: Vec<i64> = (lo..=bound).filter(|&x| h.is_circle(x)).collect();
    let edge = circles.first().copied();
    let mut coeffs: BTreeMap<Diagram, i64> = BTreeMap::new();
    for a in circles.into_iter().combinations(k) {
        let g = h.star_add(&a)?;
        for f in kac_constituents(&g)? {
            if coeffs.contains_key(&f) {
                continue;
            }
            let b = pair_proj_euler(&f, &h)?;
            if b != 0 && edge.is_some_and(|e| a.contains(&e)) {
                return Err(DecomposeError::WindowTooSmall { lo });
            }
            coeffs.insert(f, b);
        }
    }
    Ok(CharCombination::from_terms(
        h.m(),
        h.n(),
        Basis::Irreducible,
        coeffs.iter().map(|(f, b)| (f, *b)),
    )?)
}

struct EulerMoves {
    bound: i64,
    k: i64,
    far: i64,
    phase1_cs: BTreeSet<i64>,
    phase1_ds: BTreeSet<i64>,
    out: BTreeSet<Diagram>,
}

impl EulerMoves {
    fn phase1(&mut self, cur: &Diagram, last_c: Option<i64>, remaining: usize) {
        self.phase2(cur, None, remaining);
        for d in cur.crosses() {
            if d > self.bound || self.phase1_cs.contains(&d) {
                continue;
            }
            let top = last_c.map_or(d - 1, |l| (l - 1).min(d - 1));
            for c in (step_free(cur, d, 1 - 2 * self.k)..=top).rev() {
                if self.phase1_ds.contains(&c) {
                    continue;
                }
                if let Some(next) = inverse_move(cur, c, d) {
                    self.phase1_cs.insert(c);
                    let fresh_d = self.phase1_ds.insert(d);
                    self.phase1(&next, Some(c), remaining);
                    self.phase1_cs.remove(&c);
                    if fresh_d {
                        self.phase1_ds.remove(&d);
                    }
                }
            }
        }
    }

    fn phase2(&mut self, cur: &Diagram, last_c: Option<i64>, remaining: usize) {
        if remaining == 0 {
            if let Ok(f) = cur.as_full() {
                if f.is_partially_polynomial() {
                    self.out.insert(f);
                }
            }
            return;
        }
        for d in self.bound + 1..=self.far {
            if !cur.is_circle(d) {
                continue;
            }
            let added = match cur.star_add(&[d]) {
                Ok(x) => x,
                Err(_) => continue,
            };
            let top = last_c.map_or(d - 1, |l| (l - 1).min(d - 1));
            for c in (step_free(cur, d, 1 - 2 * self.k)..=top).rev() {
                if self.phase1_cs.contains(&c) || self.phase1_ds.contains(&c) {
                    continue;
                }
                if let Some(next) = inverse_move(&added, c, d) {
                    self.phase2(&next, Some(c), remaining - 1);
                }
            }
        }
    }
}

/// Support of `ch E(h)` in the irreducible basis, found by searching the
/// two-phase move sequences: inverse moves of crosses at or below `n - m`
/// with decreasing targets, followed by `m - r` new crosses placed above
/// `n - m` and moved left, again with decreasing targets.
pub fn euler_to_irr_support_by_moves(h: &Diagram) -> Result<BTreeSet<Diagram>, DecomposeError> {
    if !h.is_partially_polynomial() {
        return Err(DecomposeError::NotPartiallyPolynomial(h.clone()));
    }
    let h = h.as_euler();
    let bound = h.pp_bound();
    let k = block_atypicality(&h) as i64;
    let top = h.support().map_or(bound, |(_, hi)| hi.max(bound));
    let mut search = EulerMoves {
        bound,
        k,
        far: step_free(&h, top, 2 * k),
        phase1_cs: BTreeSet::new(),
        phase1_ds: BTreeSet::new(),
        out: BTreeSet::new(),
    };
    search.phase1(&h, None, h.m() - h.rank().0);
    Ok(search.out)
}

/// Undoes, for every cross `b` of `g`, the admissible move that would have
/// landed a cross on `b`.
fn undo_all(g: &Diagram) -> Result<Diagram, DiagramError> {
    let mut f = g.clone();
    for b in g.crosses() {
        let a = g.reverse_partner(b)?;
        f = f.apply(&Transposition::new(a, b)?);
    }
    Ok(f)
}

/// The irreducible `L(f)` with `f` partially polynomial and
/// `π_{f^{-1}(×)}(f) = h*D` for circles `D` of `h` just above `n - m`.
fn lead(h: &Diagram) -> Result<Diagram, DecomposeError> {
    let bound = h.pp_bound();
    let add = h.m() - h.rank().0;
    let k = (h.crosses().len() + add) as i64;
    let circles: Vec<i64> = (bound + 1..=step_free(h, bound, 2 * k + 1))
        .filter(|&x| h.is_circle(x))
        .collect();
    let mut found = vec![];
    for d in circles.into_iter().combinations(add) {
        let g = h.star_add(&d)?;
        let f = undo_all(&g)?;
        if f.is_partially_polynomial() && f.pi_c(&f.crosses())? == g {
            found.push(f);
        }
    }
    if found.len() != 1 {
        return Err(DecomposeError::Lead {
            h: h.clone(),
            count: found.len(),
        });
    }
    Ok(found.pop().expect("one element"))
}

fn solve_exact(matrix: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Result<Vec<BigRational>, DecomposeError> {
    let size = rhs.len();
    let mut rows: Vec<Vec<BigRational>> = matrix
        .into_iter()
        .zip(rhs)
        .map(|(mut row, r)| {
            row.push(r);
            row
        })
        .collect();
    for col in 0..size {
        let pivot = (col..size)
            .find(|&i| !rows[i][col].is_zero())
            .ok_or(DecomposeError::Singular)?;
        rows.swap(col, pivot);
        let p = rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x = &*x / &p;
        }
        let pivot_row = rows[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &factor * y;
            }
        }
    }
    Ok(rows.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

fn irr_char_at(f: &Diagram, lo: i64) -> Result<CharCombination, DecomposeError> {
    let k = f.crosses().len();
    let bound = f.pp_bound();
    let fulls = block_members(f, Kind::Full, k, lo, bound);
    let index: BTreeMap<&Diagram, usize> = fulls.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut columns: Vec<Option<Diagram>> = vec![None; fulls.len()];
    for p in 0..=k {
        for h in block_members(f, Kind::Euler, p, step_free(f, lo, -2 * k as i64 - 2), bound) {
            let l = lead(&h)?;
            if let Some(&i) = index.get(&l) {
                if columns[i].replace(h).is_some() {
                    return Err(DecomposeError::Lead { h: l, count: 2 });
                }
            }
        }
    }
    let eulers: Vec<Diagram> = columns.into_iter().flatten().collect();
    if eulers.len() != fulls.len() {
        return Err(DecomposeError::BlockMismatch {
            fulls: fulls.len(),
            eulers: eulers.len(),
        });
    }
    let mut matrix = vec![];
    for (i, row_f) in fulls.iter().enumerate() {
        let mut row = vec![];
        for (j, h) in eulers.iter().enumerate() {
            let v = pair_proj_euler(row_f, h)?;
            if i == j && v.abs() != 1 {
                return Err(DecomposeError::NonUnitriangular {
                    f: row_f.clone(),
                    h: h.clone(),
                    value: v,
                });
            }
            row.push(BigRational::from_integer(BigInt::from(v)));
        }
        matrix.push(row);
    }
    let rhs = fulls
        .iter()
        .map(|g| {
            if g == f {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let solution = solve_exact(matrix, rhs)?;
    let mut out = CharCombination::zero(f.m(), f.n(), Basis::Euler);
    for (h, c) in eulers.iter().zip(solution) {
        if !c.is_integer() {
            return Err(DecomposeError::NonIntegral(h.clone()));
        }
        let c = c
            .to_integer()
            .to_i64()
            .ok_or(DecomposeError::Char(CharError::Overflow))?;
        out.add_term(h, c)?;
    }
    Ok(out)
}

/// Default left end of the window in [`irr_char`]: `2k + 1` free positions
/// below the lowest cross.
pub fn default_irr_window(f: &Diagram) -> i64 {
    let crosses = f.crosses();
    let k = crosses.len() as i64;
    crosses
        .first()
        .map_or(f.pp_bound(), |&lo| step_free(f, lo, -2 * k - 1))
}

/// `ch L(f)` as an Euler combination, by inverting `b_{f,h} = (P(f), E(h))`
/// over the block of `f` with crosses in `[lo, n - m]`. The result is
/// recomputed with the window widened by 3 and must agree.
pub fn irr_char_euler(f: &Diagram, lo: Option<i64>) -> Result<CharCombination, DecomposeError> {
    f.require_kind(Kind::Full)?;
    if !f.is_partially_polynomial() {
        return Err(DecomposeError::NotPartiallyPolynomial(f.clone()));
    }
    let lo = lo.unwrap_or_else(|| default_irr_window(f));
    if f.crosses().first().is_some_and(|&c| c < lo) {
        return Err(DecomposeError::WindowTooSmall { lo });
    }
    let narrow = irr_char_at(f, lo)?;
    let wide = irr_char_at(f, lo - 3)?;
    if narrow != wide {
        return Err(DecomposeError::WindowTooSmall { lo });
    }
    Ok(narrow)
}

/// `ch L(f)` both as an Euler combination and as a Laurent polynomial.
pub fn irr_char(
    f: &Diagram,
    lo: Option<i64>,
) -> Result<(CharCombination, LaurentPoly), DecomposeError> {
    let combo = irr_char_euler(f, lo)?;
    let poly = combo.to_laurent()?;
    Ok((combo, poly))
}

/// Expands an irreducible combination into a Laurent polynomial through
/// [`irr_char`] with default windows.
pub fn irr_combination_to_laurent(c: &CharCombination) -> Result<LaurentPoly, DecomposeError> {
    if c.basis() != Basis::Irreducible {
        return c.to_laurent().map_err(Into::into);
    }
    let (m, n) = c.ambient();
    let mut out = LaurentPoly::zero(m, n);
    for (f, coeff) in c.terms() {
        let (_, poly) = irr_char(f, None)?;
        out = &out + &poly.scale(&BigInt::from(coeff));
    }
    Ok(out)
}

/// `𝒫_n^{(m)} ∩ [lo, 0]`: the `n`-subsets `A ⊆ Z_{≤0}` such that
/// `(P(A), E(B)) ≠ 0` for some `|B| ≤ m` in `gl(n|n)`. Uses the recursion on
/// the largest element for `m < n`; for `m ≥ n` every subset qualifies.
/// Sets are listed in decreasing order.
pub fn p_set(n: usize, m: usize, lo: i64) -> Result<BTreeSet<Vec<i64>>, DecomposeError> {
    if lo > 0 {
        return Err(DecomposeError::InvalidParameters(format!(
            "window start {lo} is positive"
        )));
    }
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(vec![]);
        return Ok(out);
    }
    if m >= n {
        for c in (lo..=0).rev().combinations(n) {
            out.insert(c);
        }
        return Ok(out);
    }
    for i in 0..=m as i64 {
        if -i < lo {
            break;
        }
        let shift = i + 1;
        if lo + shift > 0 && n > 1 {
            continue;
        }
        for rest in p_set(n - 1, m - i as usize, (lo + shift).min(0))? {
            let mut a = vec![-i];
            a.extend(rest.iter().map(|x| x - shift));
            if a.iter().all(|&x| x >= lo) {
                out.insert(a);
            }
        }
    }
    Ok(out)
}

/// Closed form of `ch L(a, b)` in the principal block of `gl(2|2)`:
/// `χ(Γ_{|a|-1,1})` when `b = a - 1`, otherwise
/// `(-1)^{a-b-1} [χ(Γ_{|a|-1,1}) + χ(Γ_{|a|,a-b})]`.
pub fn gl22_irr_char(a: i64, b: i64) -> Result<CharCombination, DecomposeError> {
    if a > 0 || b >= a {
        return Err(DecomposeError::InvalidParameters(format!(
            "need b < a <= 0, got a={a}, b={b}"
        )));
    }
    let first = chi_gamma(GammaGraphParams::new(-a - 1, 1)?, 2)?;
    if a - b == 1 {
        return Ok(first);
    }
    let second = chi_gamma(GammaGraphParams::new(-a, a - b)?, 2)?;
    let sign = if (a - b - 1) % 2 == 0 { 1 } else { -1 };
    Ok(first.try_add(&second)?.scale(sign)?)
}
