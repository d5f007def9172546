mod common;

use std::collections::BTreeSet;

use itertools::Itertools;
use superchar::decompose::{
    default_constituent_window, euler_to_irr_support_by_moves, irr_combination_to_laurent,
    kac_constituents_in_window,
};
use superchar::*;

use common::{atypical, fulls};

const AMBIENTS: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)];

#[test]
fn constituent_search_matches_window_enumeration() {
    for (m, n) in AMBIENTS {
        for g in fulls(m, n, -2, 2) {
            let (lo, hi) = default_constituent_window(&g);
            let by_moves = kac_constituents(&g).unwrap();
            let by_window = kac_constituents_in_window(&g, lo - 2, hi + 2).unwrap();
            assert_eq!(by_moves, by_window, "g = {g}");
        }
    }
}

#[test]
fn flags_and_constituents_are_dual() {
    for (m, n) in AMBIENTS {
        for f in fulls(m, n, -2, 2) {
            let flag = proj_flag(&f).unwrap();
            assert_eq!(flag.len(), 1 << f.crosses().len());
            for g in &flag {
                assert!(kac_constituents(g).unwrap().contains(&f), "f={f} g={g}");
            }
        }
    }
}

#[test]
fn both_euler_supports_agree_on_partially_polynomial_terms() {
    for (m, n) in AMBIENTS {
        for f in fulls(m, n, -3, 2).into_iter().filter(|f| f.is_partially_polynomial()) {
            let support = euler_support(&f).unwrap();
            let pp: BTreeSet<Diagram> = support
                .keys()
                .filter(|h| h.is_partially_polynomial())
                .cloned()
                .collect();
            assert_eq!(pp, euler_support_pp(&f).unwrap(), "f = {f}");
            for (h, c) in &support {
                assert_eq!(pair_proj_euler(&f, h).unwrap(), *c);
            }
        }
    }
}

#[test]
fn euler_characters_expand_into_irreducibles() {
    for b in [vec![], vec![0], vec![-1], vec![0, -1], vec![-1, -2], vec![0, -2]] {
        let h = atypical(2, Kind::Euler, &b);
        let irr = euler_to_irr(&h, None).unwrap();
        let support: BTreeSet<Diagram> = irr.terms().map(|(d, _)| d.clone()).collect();
        assert_eq!(euler_to_irr_support_by_moves(&h).unwrap(), support, "E({b:?})");
        let lhs = euler_char(&h).unwrap();
        let rhs = irr_combination_to_laurent(&irr).unwrap();
        assert_eq!(lhs, rhs, "E({b:?})");
    }
}

#[test]
fn euler_characters_expand_off_the_square_case() {
    for (m, n) in [(1usize, 2usize), (2, 1)] {
        let bound = n as i64 - m as i64;
        for r in 0..=m {
            let Some(s) = (r + n).checked_sub(m) else { continue };
            for a in (bound - 3..=bound).combinations(r) {
                for b in (bound - 3..=bound).combinations(s) {
                    let Ok(h) = Diagram::euler(m, n, a.clone(), b) else { continue };
                    let irr = euler_to_irr(&h, None).unwrap();
                    let support: BTreeSet<Diagram> = irr.terms().map(|(d, _)| d.clone()).collect();
                    assert_eq!(euler_to_irr_support_by_moves(&h).unwrap(), support, "{h}");
                    let rhs = irr_combination_to_laurent(&irr).unwrap();
                    assert_eq!(euler_char(&h).unwrap(), rhs, "{h}");
                }
            }
        }
    }
}

#[test]
fn closed_forms_match_inversion() {
    for (a, b) in [(0, -1), (0, -3), (-1, -2), (-2, -5)] {
        let (comb, poly) = irr_char(&atypical(2, Kind::Full, &[a, b]), None).unwrap();
        assert_eq!(comb, gl22_irr_char(a, b).unwrap());
        assert_eq!(poly, comb.to_laurent().unwrap());
    }
}

#[test]
fn too_small_a_window_is_reported() {
    let h = atypical(2, Kind::Euler, &[-1]);
    assert!(matches!(
        euler_to_irr(&h, Some(-1)),
        Err(DecomposeError::WindowTooSmall { .. })
    ));
    let f = atypical(2, Kind::Full, &[-1, -3]);
    assert!(matches!(
        irr_char_euler(&f, Some(-2)),
        Err(DecomposeError::WindowTooSmall { .. })
    ));
}

#[test]
fn rank_one_sets_have_the_explicit_form() {
    for n in 2..=4usize {
        let ni = n as i64;
        let lo = -ni - 4;
        let mut expect = BTreeSet::new();
        for a in lo..=1 - ni {
            let mut s: Vec<i64> = (2 - ni..=0).rev().collect();
            s.push(a);
            expect.insert(s);
        }
        for b in -ni..=0 {
            expect.insert((-ni..=0).rev().filter(|&x| x != b).collect());
        }
        assert_eq!(p_set(n, 1, lo).unwrap(), expect, "n = {n}");
    }
}

/// `A ∈ 𝒫ₙ⁽ᵐ⁾` iff some `E(B)` with `|B| ≤ m` pairs nonzero with `P(A)`.
fn brute_p_set(n: usize, m: usize, lo: i64) -> BTreeSet<Vec<i64>> {
    let bs: Vec<Diagram> = (0..=m.min(n))
        .flat_map(|p| (lo - 2 * n as i64..=0).combinations(p))
        .map(|b| atypical(n, Kind::Euler, &b))
        .collect();
    (lo..=0)
        .rev()
        .combinations(n)
        .filter(|a| {
            let f = atypical(n, Kind::Full, a);
            bs.iter().any(|h| pair_proj_euler(&f, h).unwrap() != 0)
        })
        .collect()
}

#[test]
fn p_set_matches_its_definition() {
    for n in 0..=3 {
        for m in 0..=3 {
            let lo = -4;
            assert_eq!(p_set(n, m, lo).unwrap(), brute_p_set(n, m, lo), "n={n} m={m}");
        }
    }
}
