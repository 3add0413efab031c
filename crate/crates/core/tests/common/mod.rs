#![allow(dead_code)]

use ghcseries::fixtures::Fixture;
use ghcseries::rootsys::coroot;
use ghcseries::{
    build_root_system, minimal_parabolic, parse_type_label, CompatibleParabolic, Rational,
    RootSystem, Sl2Embedding, Weight,
};

pub const SMALL_TYPES: [&str; 8] = ["A1", "A2", "B2", "C2", "G2", "A1+A1", "A3", "B3"];
pub const RANK2_TYPES: [&str; 5] = ["A1", "A2", "C2", "G2", "A1+A1"];

pub fn rs(label: &str) -> RootSystem {
    build_root_system(&parse_type_label(label).unwrap()).unwrap()
}

pub fn fixture(f: Fixture) -> CompatibleParabolic {
    minimal_parabolic(&f.embedding().unwrap())
}

/// `h = sum c_i alpha_i^vee`; `None` when the result fails validation.
pub fn embedding_from_coeffs(rs: &RootSystem, coeffs: &[i64]) -> Option<Sl2Embedding> {
    let h = rs
        .simple_roots()
        .iter()
        .zip(coeffs)
        .fold(Weight::zero(rs.ambient_dim()), |acc, (a, &c)| {
            &acc + &coroot(a).scale(Rational::from_integer(c))
        });
    Sl2Embedding::from_defining_vector(rs, &h).ok()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}
