#![allow(dead_code)]

use itertools::Itertools;
use superchar::{Diagram, Kind};

/// Every full diagram of `gl(m|n)` with `A, B ⊆ [lo, hi]`.
pub fn fulls(m: usize, n: usize, lo: i64, hi: i64) -> Vec<Diagram> {
    let mut out = vec![];
    for a in (lo..=hi).combinations(m) {
        for b in (lo..=hi).combinations(n) {
            out.push(Diagram::full(m, n, a.iter().copied(), b).unwrap());
        }
    }
    out
}

/// Every Euler diagram of `gl(m|n)` with `A, B ⊆ [lo, hi]`.
pub fn eulers(m: usize, n: usize, lo: i64, hi: i64) -> Vec<Diagram> {
    let mut out = vec![];
    for r in 0..=m {
        let s = r as i64 - m as i64 + n as i64;
        if s < 0 || s > n as i64 {
            continue;
        }
        for a in (lo..=hi).combinations(r) {
            for b in (lo..=hi).combinations(s as usize) {
                out.push(Diagram::euler(m, n, a.iter().copied(), b).unwrap());
            }
        }
    }
    out
}

pub fn atypical(k: usize, kind: Kind, crosses: &[i64]) -> Diagram {
    Diagram::atypical(k, k, kind, crosses.iter().copied()).unwrap()
}

/// Sign of the permutation that sorts `seq` into decreasing order, from its
/// cycle decomposition.
pub fn sorting_sign(seq: &[i64]) -> i64 {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by(|&i, &j| seq[j].cmp(&seq[i]));
    let mut seen = vec![false; seq.len()];
    let mut sign = 1;
    for start in 0..seq.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = order[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// `(-1)^{Σ_i |Y ∩ (x_i, ∞)|}`.
pub fn counting_sign(x: &[i64], y: &[i64]) -> i64 {
    let count: usize = x.iter().map(|xi| y.iter().filter(|&&yj| yj > *xi).count()).sum();
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
