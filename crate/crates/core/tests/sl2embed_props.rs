mod common;

use common::{embedding_from_coeffs, rs, SMALL_TYPES};
use ghcseries::{sl2_decomposition, t_character_of_g, Sl2Embedding};
use proptest::prelude::*;

#[test]
fn root_embeddings_give_two_on_beta() {
    for label in SMALL_TYPES {
        let r = rs(label);
        for beta in r.roots() {
            let e = Sl2Embedding::from_root(&r, beta).unwrap();
            assert_eq!(e.eval(beta), 2.into(), "{label} {beta}");
        }
    }
}

#[test]
fn principal_embeddings_are_regular() {
    for label in SMALL_TYPES {
        let e = Sl2Embedding::from_principal(&rs(label)).unwrap();
        assert!(e.is_regular(), "{label}");
        assert_eq!(t_character_of_g(&e).mult(0), e.root_system().rank() as i64);
    }
}

proptest! {
    #[test]
    fn grading_of_g(idx in 0..SMALL_TYPES.len(), coeffs in prop::collection::vec(-3i64..=4, 3)) {
        let r = rs(SMALL_TYPES[idx]);
        let Some(e) = embedding_from_coeffs(&r, &coeffs) else { return Ok(()) };
        let ch = t_character_of_g(&e);
        prop_assert!(ch.is_symmetric());
        prop_assert_eq!(ch.total(), r.dim_g() as i64);
        let d = sl2_decomposition(&ch).unwrap();
        prop_assert_eq!(d.to_t_character(), ch.clone());
        prop_assert_eq!(d.dim(), r.dim_g() as i64);
        if e.is_regular() {
            prop_assert_eq!(ch.mult(0), r.rank() as i64);
        }
    }
}
