mod common;

use proptest::prelude::*;
use superchar::characters::atypical_euler;
use superchar::laurent::Block;
use superchar::*;

use common::{eulers, fulls};

fn dominant(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn euler_b(k: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::sample::subsequence((-4i64..=0).collect::<Vec<_>>(), 0..=k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_at_full_rank_is_kac(
        (m, n, lambda, mu) in (0usize..=2, 0usize..=2)
            .prop_flat_map(|(m, n)| (Just(m), Just(n), dominant(m), dominant(n)))
    ) {
        let w = Weight::new(lambda.clone(), mu.clone()).unwrap();
        let f = weight_to_diagram(&w, m, n).unwrap();
        let e = euler_weight_to_diagram(&lambda, &mu, m, n).unwrap();
        prop_assert_eq!(kac_char(&f).unwrap(), euler_char(&e).unwrap());
    }

    #[test]
    fn shift_agrees_with_its_laurent_form(b in euler_b(2)) {
        let e = CharCombination::single(Basis::Euler, &atypical_euler(2, &b).unwrap(), 1).unwrap();
        let lhs = shift_t_euler(&e).unwrap().to_laurent().unwrap();
        let rhs = shift_t_laurent(&e.to_laurent().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn combinations_round_trip_through_json(
        terms in prop::collection::vec((euler_b(2), -3i64..=3), 0..5)
    ) {
        let ds: Vec<(Diagram, i64)> = terms
            .iter()
            .map(|(b, c)| (atypical_euler(2, b).unwrap(), *c))
            .collect();
        let c = CharCombination::from_terms(2, 2, Basis::Euler, ds.iter().map(|(d, k)| (d, *k)))
            .unwrap();
        prop_assert_eq!(CharCombination::from_json(&c.to_json()).unwrap(), c.clone());
        // to_laurent is linear
        let doubled = c.try_add(&c).unwrap().to_laurent().unwrap();
        let expect = &c.to_laurent().unwrap() + &c.to_laurent().unwrap();
        prop_assert_eq!(doubled, expect);
    }
}

#[test]
fn kac_and_euler_characters_are_supersymmetric() {
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for f in fulls(m, n, -1, 1) {
            assert!(kac_char(&f).unwrap().is_supersymmetric(), "K({f})");
        }
        for g in eulers(m, n, -1, 1) {
            assert!(euler_char(&g).unwrap().is_supersymmetric(), "E({g})");
        }
    }
}

#[test]
fn shift_maps_graph_characters_forward() {
    for n in 0..=3 {
        for m in 1..=4 {
            let chi = chi_gamma(GammaGraphParams::new(n, m).unwrap(), 2).unwrap();
            let next = chi_gamma(GammaGraphParams::new(n + 1, m).unwrap(), 2).unwrap();
            assert_eq!(shift_t_euler(&chi).unwrap(), next, "Gamma_{n},{m}");
        }
    }
    let start = chi_gamma(GammaGraphParams::new(-1, 1).unwrap(), 2).unwrap();
    let next = chi_gamma(GammaGraphParams::new(0, 1).unwrap(), 2).unwrap();
    assert_eq!(shift_t_euler(&start).unwrap(), next);
}

#[test]
fn schur_polynomials() {
    // s_(1,0)(x1, x2) = x1 + x2
    let s = schur(&[1, 0], Block::X, 2, 0).unwrap();
    let x = |i| LaurentPoly::x_pow(2, 0, i, 1);
    assert_eq!(s, &x(0) + &x(1));
    // s_(1,1) = x1 x2; negative entries are allowed
    let s = schur(&[-1, -1], Block::Y, 0, 2).unwrap();
    assert_eq!(s, LaurentPoly::monomial(vec![], vec![-1, -1]));
    // s_(2,0) = x1^2 + x1 x2 + x2^2
    let s = schur(&[2, 0], Block::X, 2, 0).unwrap();
    assert_eq!(s.len(), 3);
    assert!(s.is_symmetric());
    assert!(schur(&[0, 1], Block::X, 2, 0).is_err());
}

#[test]
fn graph_vertices_and_edges() {
    let g = GammaGraphParams::new(2, 1).unwrap();
    assert_eq!(g.vertices(), vec![0, -1, -2]);
    assert_eq!(g.edges(), vec![(0, -1), (0, -2), (-1, -2)]);
    assert!(GammaGraphParams::new(-2, 1).is_err());
    assert!(GammaGraphParams::new(0, 0).is_err());
}
