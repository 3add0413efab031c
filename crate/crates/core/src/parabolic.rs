//! The minimal parabolic `p = m + n` compatible with an `sl(2)`-subalgebra,
//! its numerical invariants, the genericity conditions, and the
//! reconstructibility thresholds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::linalg::solve;
use crate::rootsys::{RootSystem, Weight};
use crate::sl2embed::{EmbeddingKind, Sl2Embedding};
use crate::{Error, Rational, Result};

/// Which multiset the maximum and submaximum weights are read from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LambdaConvention {
    /// All of `n`, including the weight-2 line `n ∩ k`.
    #[default]
    N,
    /// Only `n ∩ k^perp`: one copy of 2 removed.
    Perp,
}

impl FromStr for LambdaConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n" => Ok(LambdaConvention::N),
            "perp" => Ok(LambdaConvention::Perp),
            other => Err(Error::InvalidInput(format!(
                "lambda convention must be 'n' or 'perp', got '{other}'"
            ))),
        }
    }
}

impl fmt::Display for LambdaConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaConvention::N => "n",
            LambdaConvention::Perp => "perp",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CompatibleParabolic {
    embedding: Sl2Embedding,
    borel: RootSystem,
    n_roots: Vec<Weight>,
    m_roots: Vec<Weight>,
    n_weights: Vec<i64>,
}

pub fn minimal_parabolic(e: &Sl2Embedding) -> CompatibleParabolic {
    let borel = e
        .root_system()
        .oriented_by(e.h())
        .expect("h has the ambient dimension");
    let mut n_roots = Vec::new();
    let mut m_roots = Vec::new();
    let mut n_weights = Vec::new();
    for (a, v) in e.graded_roots() {
        if v > 0 {
            n_roots.push(a.clone());
            n_weights.push(v);
        } else if v == 0 {
            m_roots.push(a.clone());
        }
    }
    n_weights.sort_unstable_by(|a, b| b.cmp(a));
    CompatibleParabolic {
        embedding: e.clone(),
        borel,
        n_roots,
        m_roots,
        n_weights,
    }
}

impl CompatibleParabolic {
    pub fn embedding(&self) -> &Sl2Embedding {
        &self.embedding
    }

    /// The root system with positivity re-derived from `h`; its Borel
    /// subalgebra lies in `p`.
    pub fn borel(&self) -> &RootSystem {
        &self.borel
    }

    pub fn n_roots(&self) -> &[Weight] {
        &self.n_roots
    }

    pub fn m_roots(&self) -> &[Weight] {
        &self.m_roots
    }

    /// `alpha(h)` over the roots of `n`, sorted descending.
    pub fn n_weights(&self) -> &[i64] {
        &self.n_weights
    }

    /// Weights of `n ∩ k^perp`: the `n` weights with one copy of 2 removed.
    pub fn perp_weights(&self) -> Vec<i64> {
        let mut w = self.n_weights.clone();
        if let Some(i) = w.iter().position(|&x| x == 2) {
            w.remove(i);
        }
        w
    }

    pub fn s(&self) -> usize {
        1
    }

    pub fn r(&self) -> usize {
        self.n_roots.len() - 1
    }

    /// `m` is the Cartan subalgebra.
    pub fn m_is_cartan(&self) -> bool {
        self.m_roots.is_empty()
    }

    pub fn two_rho_n_perp(&self) -> i64 {
        self.n_weights.iter().sum::<i64>() - 2
    }

    pub fn rho_n(&self) -> Rational {
        Rational::new(self.n_weights.iter().sum(), 2)
    }

    pub fn lambdas(&self, conv: LambdaConvention) -> Lambdas {
        let w = match conv {
            LambdaConvention::N => self.n_weights.clone(),
            LambdaConvention::Perp => self.perp_weights(),
        };
        match w.as_slice() {
            [] => Lambdas {
                lambda1: 0,
                lambda2: 0,
                lambda2_defaulted: true,
            },
            [x] => Lambdas {
                lambda1: *x,
                lambda2: *x,
                lambda2_defaulted: true,
            },
            [x, y, ..] => Lambdas {
                lambda1: *x,
                lambda2: *y,
                lambda2_defaulted: false,
            },
        }
    }
}

/// Maximum and submaximum weight. `lambda2_defaulted` is set when fewer
/// than two weights exist and `lambda2` was taken equal to `lambda1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lambdas {
    pub lambda1: i64,
    pub lambda2: i64,
    pub lambda2_defaulted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicInvariants {
    pub rho_n: Rational,
    pub rho: i64,
    pub two_rho_n_perp: i64,
    pub rho_tilde_n: Weight,
    pub r: usize,
    pub s: usize,
    pub n: Lambdas,
    pub perp: Lambdas,
}

impl ParabolicInvariants {
    pub fn lambdas(&self, conv: LambdaConvention) -> Lambdas {
        match conv {
            LambdaConvention::N => self.n,
            LambdaConvention::Perp => self.perp,
        }
    }
}

pub fn invariants(p: &CompatibleParabolic) -> ParabolicInvariants {
    let dim = p.embedding.root_system().ambient_dim();
    let rho_tilde_n = p
        .n_roots
        .iter()
        .fold(Weight::zero(dim), |acc, a| &acc + a)
        .scale(Rational::new(1, 2));
    ParabolicInvariants {
        rho_n: p.rho_n(),
        rho: 1,
        two_rho_n_perp: p.two_rho_n_perp(),
        rho_tilde_n,
        r: p.r(),
        s: p.s(),
        n: p.lambdas(LambdaConvention::N),
        perp: p.lambdas(LambdaConvention::Perp),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenericityWitness {
    /// `mu + 2 - rho_n < 0`.
    Condition1 { value: Rational },
    /// A nonempty submultiset `S` of the `n` weights with
    /// `(mu + 2 - rho_S) rho_S <= 0`.
    Condition2 { subset: Vec<i64>, value: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityResult {
    pub generic: bool,
    pub witness: Option<GenericityWitness>,
    /// `rho_n - 1`; the closed form reads `mu >= threshold`.
    pub threshold: Rational,
}

pub fn genericity_check(p: &CompatibleParabolic, mu: i64) -> Result<GenericityResult> {
    if mu < 0 {
        return Err(Error::InvalidInput(format!("mu must be nonnegative, got {mu}")));
    }
    let mu_q = Rational::from_integer(mu);
    let two = Rational::from_integer(2);
    let mut witness = None;

    let c1 = mu_q + two - p.rho_n();
    if c1.is_negative() {
        witness = Some(GenericityWitness::Condition1 { value: c1 });
    }

    if witness.is_none() {
        let mut distinct: BTreeMap<i64, usize> = BTreeMap::new();
        for &w in &p.n_weights {
            *distinct.entry(w).or_insert(0) += 1;
        }
        let distinct: Vec<(i64, usize)> = distinct.into_iter().collect();
        let mut counts = vec![0usize; distinct.len()];
        'scan: loop {
            // advance the mixed-radix counter; stop after wrapping
            let mut i = 0;
            loop {
                if i == counts.len() {
                    break 'scan;
                }
                if counts[i] < distinct[i].1 {
                    counts[i] += 1;
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
            let sum: i64 = distinct
                .iter()
                .zip(&counts)
                .map(|(&(w, _), &c)| w * c as i64)
                .sum();
            let rho_s = Rational::new(sum, 2);
            let value = (mu_q + two - rho_s) * rho_s;
            if !value.is_positive() {
                let subset = distinct
                    .iter()
                    .zip(&counts)
                    .rev()
                    .flat_map(|(&(w, _), &c)| std::iter::repeat_n(w, c))
                    .collect();
                witness = Some(GenericityWitness::Condition2 { subset, value });
                break;
            }
        }
    }

    let threshold = p.rho_n() - Rational::from_integer(1);
    let generic = witness.is_none();
    if generic != (mu_q >= threshold) {
        return Err(Error::InternalInconsistency(format!(
            "genericity scan gives {generic} at mu = {mu}, closed form threshold is {threshold}"
        )));
    }
    Ok(GenericityResult {
        generic,
        witness,
        threshold,
    })
}

/// A lower bound on `mu`, exact, with the least integer satisfying it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub value: Rational,
    pub min_mu: i64,
}

impl Threshold {
    pub fn new(value: Rational) -> Self {
        Threshold {
            value,
            min_mu: value.ceil().to_integer(),
        }
    }

    pub fn admits(&self, mu: i64) -> bool {
        Rational::from_integer(mu) >= self.value
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaBounds {
    pub lambdas: Lambdas,
    /// `lambda1 / 2`.
    pub socle: Threshold,
    /// `(lambda1 + lambda2) / 2`.
    pub strong: Threshold,
}

impl LambdaBounds {
    fn new(lambdas: Lambdas) -> Self {
        LambdaBounds {
            lambdas,
            socle: Threshold::new(Rational::new(lambdas.lambda1, 2)),
            strong: Threshold::new(Rational::new(lambdas.lambda1 + lambdas.lambda2, 2)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub weak: Threshold,
    pub generic: Threshold,
    pub n: LambdaBounds,
    pub perp: LambdaBounds,
    /// Principal embeddings only: `2 sum r_i - 1` where
    /// `rho_tilde = 1/2 sum r_i alpha_i`.
    pub prior_work: Option<PriorWorkBound>,
}

impl BoundsReport {
    pub fn lambda_bounds(&self, conv: LambdaConvention) -> &LambdaBounds {
        match conv {
            LambdaConvention::N => &self.n,
            LambdaConvention::Perp => &self.perp,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PriorWorkBound {
    pub r: Vec<Rational>,
    pub threshold: Threshold,
}

pub fn bounds_report(p: &CompatibleParabolic) -> BoundsReport {
    let prior_work = match p.embedding.kind() {
        EmbeddingKind::Principal => prior_work_bound(p.borel()),
        _ => None,
    };
    BoundsReport {
        weak: Threshold::new(Rational::zero()),
        generic: Threshold::new(p.rho_n() - Rational::from_integer(1)),
        n: LambdaBounds::new(p.lambdas(LambdaConvention::N)),
        perp: LambdaBounds::new(p.lambdas(LambdaConvention::Perp)),
        prior_work,
    }
}

fn prior_work_bound(rs: &RootSystem) -> Option<PriorWorkBound> {
    // 2 rho_tilde = sum r_i alpha_i; pair with each simple root to get a
    // square system in the r_i.
    let simple = rs.simple_roots();
    let a: Vec<Vec<Rational>> = simple
        .iter()
        .map(|aj| simple.iter().map(|ai| aj.dot(ai)).collect())
        .collect();
    let two_rho = rs.rho_tilde().scale(Rational::from_integer(2));
    let b: Vec<Rational> = simple.iter().map(|aj| aj.dot(&two_rho)).collect();
    let r = solve(&a, &b)?;
    let sum = r.iter().fold(Rational::zero(), |acc, &x| acc + x);
    Some(PriorWorkBound {
        r,
        threshold: Threshold::new(Rational::from_integer(2) * sum - Rational::from_integer(1)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuOmega {
    MuToOmega,
    OmegaToMu,
}

/// `mu = omega + 2 rho_n^perp`.
pub fn mu_omega(p: &CompatibleParabolic, value: i64, direction: MuOmega) -> i64 {
    match direction {
        MuOmega::MuToOmega => value - p.two_rho_n_perp(),
        MuOmega::OmegaToMu => value + p.two_rho_n_perp(),
    }
}

/// `<kappa, gamma> >= 0` for every positive root of the Borel inside `p`,
/// which covers the roots of `n` and, when `m` is not a Cartan, those of
/// `b ∩ m`.
pub fn b_dominant(p: &CompatibleParabolic, kappa: &Weight) -> Result<bool> {
    p.borel.check_dim(kappa)?;
    Ok(p
        .borel
        .positive_roots()
        .iter()
        .all(|g| !kappa.dot(g).is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;
    use crate::rootsys::{build_root_system, parse_type_label};

    fn fixture(name: &str) -> CompatibleParabolic {
        minimal_parabolic(&Fixture::by_name(name).unwrap().embedding().unwrap())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn principal_c2() {
        let p = fixture("sp4-principal");
        assert_eq!(p.n_weights(), &[6, 4, 2, 2]);
        assert_eq!(p.r(), 3);
        assert_eq!(p.s(), 1);
        let inv = invariants(&p);
        assert_eq!(inv.rho_n, q(7, 1));
        assert_eq!(inv.two_rho_n_perp, 12);
        assert_eq!((inv.n.lambda1, inv.n.lambda2), (6, 4));
        assert_eq!((inv.perp.lambda1, inv.perp.lambda2), (6, 4));
        assert_eq!(inv.rho_tilde_n, Weight::from_ints(&[2, 1]));
    }

    #[test]
    fn root_a2_conventions() {
        let inv = invariants(&fixture("sl3-root"));
        assert_eq!(inv.rho_n, q(2, 1));
        assert_eq!(inv.two_rho_n_perp, 2);
        assert_eq!((inv.n.lambda1, inv.n.lambda2), (2, 1));
        assert_eq!((inv.perp.lambda1, inv.perp.lambda2), (1, 1));
    }

    #[test]
    fn diagonal_single_perp_weight() {
        let inv = invariants(&fixture("sl2xsl2-diagonal"));
        assert_eq!((inv.n.lambda1, inv.n.lambda2), (2, 2));
        assert!(!inv.n.lambda2_defaulted);
        assert_eq!((inv.perp.lambda1, inv.perp.lambda2), (2, 2));
        assert!(inv.perp.lambda2_defaulted);
    }

    #[test]
    fn short_root_nilradical() {
        let p = fixture("sp4-short");
        assert_eq!(p.n_weights(), &[2, 2, 2]);
        let mut n = p.n_roots().to_vec();
        n.sort();
        let mut expected = vec![
            Weight::from_ints(&[1, -1]),
            Weight::from_ints(&[2, 0]),
            Weight::from_ints(&[0, -2]),
        ];
        expected.sort();
        assert_eq!(n, expected);
        assert_eq!(p.m_roots().len(), 2);
    }

    #[test]
    fn a1_principal() {
        let rs = build_root_system(&parse_type_label("A1").unwrap()).unwrap();
        let p = minimal_parabolic(&Sl2Embedding::from_principal(&rs).unwrap());
        assert_eq!(p.n_weights(), &[2]);
        assert_eq!(p.r(), 0);
        assert_eq!(p.two_rho_n_perp(), 0);
        let inv = invariants(&p);
        assert_eq!((inv.perp.lambda1, inv.perp.lambda2), (0, 0));
        assert_eq!(mu_omega(&p, 7, MuOmega::OmegaToMu), 7);
    }

    #[test]
    fn genericity_thresholds() {
        for (name, t) in [("sl2xsl2-diagonal", 1), ("sl3-principal", 3), ("sp4-short", 2)] {
            let p = fixture(name);
            for mu in 0..10 {
                let g = genericity_check(&p, mu).unwrap();
                assert_eq!(g.generic, mu >= t, "{name} mu={mu}");
                assert_eq!(g.witness.is_some(), mu < t);
            }
        }
        let p = fixture("sp4-principal");
        let g = genericity_check(&p, 4).unwrap();
        assert!(matches!(g.witness, Some(GenericityWitness::Condition1 { .. })));
        let g = genericity_check(&p, 5).unwrap();
        match g.witness {
            Some(GenericityWitness::Condition2 { subset, .. }) => {
                assert_eq!(subset.iter().sum::<i64>(), 14)
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(genericity_check(&p, -1).is_err());
    }

    #[test]
    fn bounds() {
        let b = bounds_report(&fixture("sp4-principal"));
        assert_eq!(b.n.socle.value, q(3, 1));
        assert_eq!(b.n.strong.value, q(5, 1));
        assert_eq!(b.generic.value, q(6, 1));
        let pw = b.prior_work.unwrap();
        // simple roots 2e2, e1-e2 in that order
        assert_eq!(pw.r, vec![q(3, 1), q(4, 1)]);
        assert_eq!(pw.threshold.value, q(13, 1));

        let b = bounds_report(&fixture("sl3-root"));
        assert_eq!(b.n.strong.value, q(3, 2));
        assert_eq!(b.n.strong.min_mu, 2);
        assert!(b.prior_work.is_none());

        let b = bounds_report(&fixture("sp4-long"));
        assert_eq!(b.n.strong.value, q(3, 2));
        assert_eq!(b.generic.value, q(1, 1));
    }

    #[test]
    fn mu_omega_round_trip() {
        let p = fixture("sl2xsl2-diagonal");
        assert_eq!(mu_omega(&p, 0, MuOmega::MuToOmega), -2);
        let p = fixture("sp4-principal");
        assert_eq!(mu_omega(&p, 0, MuOmega::MuToOmega), -12);
        assert_eq!(mu_omega(&p, -12, MuOmega::OmegaToMu), 0);
    }

    #[test]
    fn dominance() {
        let p = fixture("sp4-principal");
        let rho = p.borel().rho_tilde().clone();
        assert!(b_dominant(&p, &rho).unwrap());
        assert!(!b_dominant(&p, &-&rho).unwrap());
        let k = Weight::new(vec![q(-3, 2), q(-1, 2)]);
        assert!(!b_dominant(&p, &k).unwrap());
    }
}
