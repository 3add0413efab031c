//! The six rank-2 pairs `(g, k)` used throughout the examples.

use crate::rootsys::{build_root_system, parse_type_label, Weight};
use crate::sl2embed::Sl2Embedding;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// `sl(2) + sl(2)` with the diagonal subalgebra.
    Sl2xSl2Diagonal,
    /// `sl(3)` with the root subalgebra of `e1 - e2`.
    Sl3Root,
    Sl3Principal,
    /// `sp(4)` with the long root `2 e1`.
    Sp4Long,
    /// `sp(4)` with the short root `e1 - e2`.
    Sp4Short,
    Sp4Principal,
}

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::Sl2xSl2Diagonal,
        Fixture::Sl3Root,
        Fixture::Sl3Principal,
        Fixture::Sp4Long,
        Fixture::Sp4Short,
        Fixture::Sp4Principal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Sl2xSl2Diagonal => "sl2xsl2-diagonal",
            Fixture::Sl3Root => "sl3-root",
            Fixture::Sl3Principal => "sl3-principal",
            Fixture::Sp4Long => "sp4-long",
            Fixture::Sp4Short => "sp4-short",
            Fixture::Sp4Principal => "sp4-principal",
        }
    }

    pub fn by_name(name: &str) -> Option<Fixture> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn algebra(self) -> &'static str {
        match self {
            Fixture::Sl2xSl2Diagonal => "A1+A1",
            Fixture::Sl3Root | Fixture::Sl3Principal => "A2",
            _ => "C2",
        }
    }

    pub fn embedding(self) -> Result<Sl2Embedding> {
        let rs = build_root_system(&parse_type_label(self.algebra())?)?;
        match self {
            Fixture::Sl2xSl2Diagonal => {
                Sl2Embedding::from_defining_vector(&rs, &Weight::from_ints(&[1, -1, 1, -1]))
            }
            Fixture::Sl3Root => Sl2Embedding::from_root(&rs, &Weight::from_ints(&[1, -1, 0])),
            Fixture::Sp4Long => Sl2Embedding::from_root(&rs, &Weight::from_ints(&[2, 0])),
            Fixture::Sp4Short => Sl2Embedding::from_root(&rs, &Weight::from_ints(&[1, -1])),
            Fixture::Sl3Principal | Fixture::Sp4Principal => Sl2Embedding::from_principal(&rs),
        }
    }
}
