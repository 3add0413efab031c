mod common;

use std::collections::BTreeMap;

use common::fixture;
use ghcseries::fixtures::Fixture;
use ghcseries::{e1_page_dimension, nk_cohomology, top_n_vanishing, KCharacter};
use proptest::prelude::*;

const CUTOFF: i64 = 40;

fn k_character() -> impl Strategy<Value = KCharacter> {
    prop::collection::vec((0i64..=12, 1i64..=3), 0..=5)
        .prop_map(|v| KCharacter::from_pairs(CUTOFF, false, v).unwrap())
}

/// Coefficients of `prod (1 - t^w)` over the weights.
fn signed_subset_polynomial(weights: &[i64]) -> BTreeMap<i64, i64> {
    let mut poly = BTreeMap::from([(0i64, 1i64)]);
    for &w in weights {
        let mut next = poly.clone();
        for (&e, &c) in &poly {
            *next.entry(e + w).or_insert(0) -= c;
        }
        poly = next;
    }
    poly
}

proptest! {
    #[test]
    fn kostant_totals(m in k_character()) {
        let (h0, h1) = nk_cohomology(&m).unwrap();
        let total: i64 = m.iter().map(|(_, c)| c).sum();
        prop_assert_eq!(h0.total(), total);
        prop_assert_eq!(h1.total(), total);
    }

    #[test]
    fn e1_euler_matches_koszul(m in k_character(), fi in 0..6usize, kappa in -14i64..=6) {
        let p = fixture(Fixture::ALL[fi]);
        let perp = p.perp_weights();
        prop_assume!(perp.len() <= 3);
        let r = perp.len() as i64;
        let euler: i64 = (0..=r + 1)
            .map(|j| (-1i64).pow(j as u32) * e1_page_dimension(&m, &p, j, kappa).unwrap())
            .sum();
        // a dual exterior vector of weight -s sends H^i weight x to x - s
        let poly = signed_subset_polynomial(&perp);
        let (h0, h1) = nk_cohomology(&m).unwrap();
        let oracle: i64 = poly
            .iter()
            .map(|(&s, &c)| c * (h0.get(kappa + s) - h1.get(kappa + s)))
            .sum();
        prop_assert_eq!(euler, oracle);
    }

    #[test]
    fn top_vanishing_is_monotone(m in k_character(), extra in k_character(), fi in 0..6usize, kappa in -30i64..=0) {
        let p = fixture(Fixture::ALL[fi]);
        let mut bigger = m.clone();
        for (d, c) in extra.iter() {
            bigger.add(d, c).unwrap();
        }
        if top_n_vanishing(&bigger, &p, kappa).unwrap() {
            prop_assert!(top_n_vanishing(&m, &p, kappa).unwrap());
        }
    }
}
