//! Partition functions over the weights of `n`, `t`-characters of produced
//! modules `N_p(E)`, and `k`-characters of the fundamental series `F^1(p, E)`
//! via the Euler characteristic.

use crate::cohomology::{KCharacter, TruncatedTCharacter};
use crate::parabolic::CompatibleParabolic;
use crate::rootsys::Weight;
use crate::{Error, Result};

/// Counts of colored partitions: `values[x]` is the number of ways to write
/// `x` as a sum of the weights, each weight occurrence being its own color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    weights: Vec<i64>,
    values: Vec<i64>,
}

impl PartitionTable {
    pub fn new(weights: &[i64], max: i64) -> Result<Self> {
        if let Some(w) = weights.iter().find(|&&w| w <= 0) {
            return Err(Error::InvalidInput(format!(
                "partition weights must be positive, got {w}"
            )));
        }
        let len = usize::try_from(max.max(0)).unwrap_or(0) + 1;
        let mut values = vec![0i64; len];
        values[0] = 1;
        for &w in weights {
            let w = w as usize;
            for x in w..len {
                values[x] = values[x]
                    .checked_add(values[x - w])
                    .ok_or_else(|| Error::InternalError(format!("partition count overflow at {x}")))?;
            }
        }
        Ok(PartitionTable {
            weights: weights.to_vec(),
            values,
        })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn max(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    /// `P(x)`, zero for negative `x`. Panics above the table's range.
    pub fn get(&self, x: i64) -> i64 {
        if x < 0 {
            0
        } else {
            self.values[x as usize]
        }
    }
}

pub fn partition_function(weights: &[i64], x: i64) -> Result<i64> {
    Ok(PartitionTable::new(weights, x)?.get(x))
}

/// A simple finite-dimensional `p`-module, recorded through the `t`-weight
/// `omega` and its dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDatum {
    pub omega: i64,
    pub dim_e: i64,
    /// `b`-highest weight, when known.
    pub nu: Option<Weight>,
}

impl ModuleDatum {
    pub fn new(omega: i64, dim_e: i64) -> Result<Self> {
        if dim_e < 1 {
            return Err(Error::InvalidInput(format!("dim E must be positive, got {dim_e}")));
        }
        Ok(ModuleDatum {
            omega,
            dim_e,
            nu: None,
        })
    }

    /// The module whose fundamental series has minimal `k`-type `mu`.
    pub fn from_mu(p: &CompatibleParabolic, mu: i64, dim_e: i64) -> Result<Self> {
        Self::new(mu - p.two_rho_n_perp(), dim_e)
    }

    pub fn mu(&self, p: &CompatibleParabolic) -> i64 {
        self.omega + p.two_rho_n_perp()
    }
}

/// `t`-character of `N_p(E)` on the window `[-hi, hi]`: weight `x` has
/// multiplicity `dim E * P_n(x - mu - 2)`.
pub fn t_character_n(
    p: &CompatibleParabolic,
    e: &ModuleDatum,
    hi: i64,
) -> Result<TruncatedTCharacter> {
    let mu = e.mu(p);
    let table = PartitionTable::new(p.n_weights(), hi - mu - 2)?;
    let lo = -hi;
    let mut ch = TruncatedTCharacter::new((lo, hi), false);
    for x in (mu + 2).max(lo)..=hi {
        let c = table.get(x - mu - 2);
        if c != 0 {
            ch.add(x, e.dim_e * c)?;
        }
    }
    Ok(ch)
}

/// `Theta(N)` as a virtual `k`-character: the coefficient of `V(delta)` is
/// `m(delta) + m(-delta) - m(delta + 2) - m(-delta - 2)`.
pub fn euler_k_character(n: &TruncatedTCharacter, cutoff: i64) -> Result<KCharacter> {
    n.require(-cutoff - 2, cutoff + 2)?;
    let mut out = KCharacter::new(cutoff, true);
    for d in 0..=cutoff {
        let c = n.get(d) + n.get(-d) - n.get(d + 2) - n.get(-d - 2);
        if c != 0 {
            out.add(d, c)?;
        }
    }
    Ok(out)
}

/// `ch_k F^1(p, E)`: `V(delta)` occurs `dim E * (P_n(delta - mu) - P_n(delta - mu - 2))`
/// times. Requires `mu >= 0`, where `F^0` and `F^2` vanish.
pub fn f1_k_character(p: &CompatibleParabolic, e: &ModuleDatum, cutoff: i64) -> Result<KCharacter> {
    let mu = e.mu(p);
    if mu < 0 {
        return Err(Error::OutOfRegime(format!(
            "minimal k-type {mu} is negative; only the Euler characteristic is available"
        )));
    }
    let table = PartitionTable::new(p.n_weights(), cutoff - mu)?;
    let mut out = KCharacter::new(cutoff, false);
    for d in mu..=cutoff {
        let c = e.dim_e * (table.get(d - mu) - table.get(d - mu - 2));
        if c < 0 {
            return Err(Error::InternalInconsistency(format!(
                "negative multiplicity {c} at V({d})"
            )));
        }
        if c != 0 {
            out.add(d, c)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;
    use crate::parabolic::minimal_parabolic;
    use itertools::Itertools;

    fn fixture(f: Fixture) -> CompatibleParabolic {
        minimal_parabolic(&f.embedding().unwrap())
    }

    /// Colored partitions by explicit enumeration of exponent vectors.
    fn brute_partitions(weights: &[i64], x: i64) -> i64 {
        weights
            .iter()
            .map(|&w| 0..=x / w)
            .multi_cartesian_product()
            .filter(|e| e.iter().zip(weights).map(|(a, w)| a * w).sum::<i64>() == x)
            .count() as i64
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partition_function(&[2, 2], 4).unwrap(), 3);
        assert_eq!(partition_function(&[2, 2, 4, 6], 6).unwrap(), 7);
        assert_eq!(partition_function(&[3, 5], 0).unwrap(), 1);
        assert_eq!(partition_function(&[], 0).unwrap(), 1);
        assert_eq!(partition_function(&[], 3).unwrap(), 0);
        assert!(partition_function(&[0, 2], 3).is_err());
    }

    #[test]
    fn partitions_match_enumeration_on_fixtures() {
        for f in Fixture::ALL {
            let p = fixture(f);
            let table = PartitionTable::new(p.n_weights(), 30).unwrap();
            for x in 0..=30 {
                assert_eq!(table.get(x), brute_partitions(p.n_weights(), x), "{} x={x}", f.name());
            }
        }
    }

    #[test]
    fn diagonal_n_character() {
        let p = fixture(Fixture::Sl2xSl2Diagonal);
        let e = ModuleDatum::from_mu(&p, 0, 1).unwrap();
        let n = t_character_n(&p, &e, 12).unwrap();
        assert_eq!(
            n.iter().collect::<Vec<_>>(),
            vec![(2, 1), (4, 2), (6, 3), (8, 4), (10, 5), (12, 6)]
        );
        let theta = euler_k_character(&n, 10).unwrap();
        for d in 0..=10 {
            assert_eq!(theta.get(d), if d % 2 == 0 { -1 } else { 0 });
        }
        let f1 = f1_k_character(&p, &e, 10).unwrap();
        assert_eq!(f1.to_vec(), vec![1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn trivial_character_euler() {
        let n = TruncatedTCharacter::from_pairs((-10, 10), false, [(0, 1)]).unwrap();
        let theta = euler_k_character(&n, 8).unwrap();
        assert_eq!(theta.iter().collect::<Vec<_>>(), vec![(0, 2)]);
        assert!(matches!(
            euler_k_character(&n, 9),
            Err(Error::WindowTooNarrow { .. })
        ));
    }

    #[test]
    fn a1_n_character() {
        let rs = crate::rootsys::build_root_system(
            &crate::rootsys::parse_type_label("A1").unwrap(),
        )
        .unwrap();
        let p = minimal_parabolic(&crate::sl2embed::Sl2Embedding::from_principal(&rs).unwrap());
        let e = ModuleDatum::from_mu(&p, 3, 1).unwrap();
        let n = t_character_n(&p, &e, 15).unwrap();
        assert_eq!(
            n.iter().collect::<Vec<_>>(),
            vec![(5, 1), (7, 1), (9, 1), (11, 1), (13, 1), (15, 1)]
        );
        let f1 = f1_k_character(&p, &e, 15).unwrap();
        assert_eq!(f1.iter().collect::<Vec<_>>(), vec![(3, 1)]);
    }

    #[test]
    fn f1_requires_nonnegative_mu() {
        let p = fixture(Fixture::Sp4Principal);
        let e = ModuleDatum::from_mu(&p, -1, 1).unwrap();
        assert!(matches!(f1_k_character(&p, &e, 20), Err(Error::OutOfRegime(_))));
        assert!(ModuleDatum::new(0, 0).is_err());
    }

    #[test]
    fn principal_c2_f1_is_partition_difference() {
        let p = fixture(Fixture::Sp4Principal);
        let e = ModuleDatum::from_mu(&p, 0, 1).unwrap();
        let f1 = f1_k_character(&p, &e, 30).unwrap();
        for d in 0..=30 {
            let want = brute_partitions(&[2, 2, 4, 6], d)
                - if d >= 2 { brute_partitions(&[2, 2, 4, 6], d - 2) } else { 0 };
            assert_eq!(f1.get(d), want, "delta {d}");
        }
    }
}
