//! Exact computations for generalized Harish-Chandra modules over an
//! `sl(2)`-subalgebra: root data, compatible parabolics, cohomology and
//! Euler-characteristic character formulas, and block multiplicities.

pub mod blocks;
pub mod charseries;
pub mod cohomology;
mod error;
pub mod fixtures;
pub mod linalg;
pub mod parabolic;
pub mod rootsys;
pub mod sl2embed;

pub use error::{Error, Result};

/// Exact rational scalar used for all weight coordinates.
pub type Rational = num_rational::Rational64;

pub use blocks::{
    central_character, enumerate_block, integral_weyl_subgroup, iwasawa_sl3_support,
    multiplicity_matrix, reconstructibility_report, socle_k_character, BlockElement,
    CentralCharacter, MultiplicityMatrix,
};
pub use charseries::{
    euler_k_character, f1_k_character, partition_function, t_character_n, ModuleDatum,
    PartitionTable,
};
pub use cohomology::{
    e1_page_dimension, nk_cohomology, prop52_regime, top_n_vanishing, KCharacter, Prop52Regime,
    TruncatedTCharacter,
};
pub use parabolic::{
    b_dominant, bounds_report, genericity_check, invariants, minimal_parabolic, mu_omega,
    CompatibleParabolic, LambdaConvention, MuOmega, ParabolicInvariants,
};
pub use rootsys::{
    build_root_system, dot_orbit, inner_product, parse_type_label, weyl_group, Family,
    RootSystem, SimpleFactor, Weight, WeylElement, WeylGroup,
};
pub use sl2embed::{
    sl2_decomposition, t_character_of_g, EmbeddingKind, FiniteTCharacter, Sl2Decomposition,
    Sl2Embedding,
};
