mod common;

use common::{embedding_from_coeffs, fixture, q, rs, SMALL_TYPES};
use ghcseries::fixtures::Fixture;
use ghcseries::{genericity_check, invariants, minimal_parabolic, Rational};
use proptest::prelude::*;

#[test]
fn fixture_identities() {
    for f in Fixture::ALL {
        let p = fixture(f);
        let inv = invariants(&p);
        let sum: i64 = p.n_weights().iter().sum();
        assert_eq!(Rational::from_integer(sum), inv.rho_n * q(2, 1));
        assert_eq!(inv.two_rho_n_perp, sum - 2);
        assert!(inv.n.lambda1 >= inv.perp.lambda1);
        for mu in 0..20 {
            let g = genericity_check(&p, mu).unwrap();
            assert_eq!(g.generic, Rational::from_integer(mu) >= inv.rho_n - 1);
        }
    }
}

proptest! {
    #[test]
    fn parabolic_structure(idx in 0..SMALL_TYPES.len(), coeffs in prop::collection::vec(-3i64..=4, 3), mu in 0i64..30) {
        let r = rs(SMALL_TYPES[idx]);
        let Some(e) = embedding_from_coeffs(&r, &coeffs) else { return Ok(()) };
        let p = minimal_parabolic(&e);
        prop_assert_eq!(2 * p.n_roots().len() + p.m_roots().len() + r.rank(), r.dim_g());
        for a in p.m_roots() {
            prop_assert_eq!(e.eval(a), Rational::from_integer(0));
        }
        for a in p.n_roots() {
            let v = e.eval(a);
            prop_assert!(v.is_integer() && v > Rational::from_integer(0));
        }
        prop_assert!(p.n_weights().contains(&2));
        prop_assert_eq!(p.r() + 1, p.n_roots().len());
        let inv = invariants(&p);
        prop_assert!(inv.rho_n.is_integer());
        let g = genericity_check(&p, mu).unwrap();
        prop_assert_eq!(g.generic, Rational::from_integer(mu) >= inv.rho_n - 1);
    }
}
