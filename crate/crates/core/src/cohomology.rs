//! `n_k`-cohomology of `sl(2)`-modules, the first page of the spectral
//! sequence computing `n`-cohomology, and the vanishing predicates built on
//! them.
//!
//! Characters here are truncated: each carries the range on which its
//! values are known, and every lookup outside that range is an error rather
//! than a silent zero.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::parabolic::{CompatibleParabolic, LambdaConvention};
use crate::{Error, Rational, Result};

/// Multiplicities of the `sl(2)`-types `V(delta)`, `0 <= delta <= cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCharacter {
    mults: BTreeMap<i64, i64>,
    cutoff: i64,
    is_virtual: bool,
}

impl KCharacter {
    pub fn new(cutoff: i64, is_virtual: bool) -> Self {
        KCharacter {
            mults: BTreeMap::new(),
            cutoff,
            is_virtual,
        }
    }

    /// Builds a character from `(delta, multiplicity)` pairs. Entries past
    /// the cutoff are dropped.
    pub fn from_pairs(
        cutoff: i64,
        is_virtual: bool,
        pairs: impl IntoIterator<Item = (i64, i64)>,
    ) -> Result<Self> {
        let mut ch = KCharacter::new(cutoff, is_virtual);
        for (d, c) in pairs {
            if d <= cutoff {
                ch.add(d, c)?;
            }
        }
        ch.check_nonnegative()?;
        Ok(ch)
    }

    fn check_nonnegative(&self) -> Result<()> {
        if !self.is_virtual {
            if let Some((d, c)) = self.mults.iter().find(|(_, &c)| c < 0) {
                return Err(Error::InvalidInput(format!(
                    "multiplicity {c} at V({d}) in a non-virtual character"
                )));
            }
        }
        Ok(())
    }

    /// Adds `count` copies of `V(delta)`.
    pub fn add(&mut self, delta: i64, count: i64) -> Result<()> {
        if delta < 0 || delta > self.cutoff {
            return Err(Error::IndexOutOfRange {
                index: delta,
                max: self.cutoff,
            });
        }
        let e = self.mults.entry(delta).or_insert(0);
        *e += count;
        if *e == 0 {
            self.mults.remove(&delta);
        }
        Ok(())
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn is_virtual(&self) -> bool {
        self.is_virtual
    }

    /// Multiplicity of `V(delta)`. Panics past the cutoff; use
    /// [`KCharacter::try_get`] when that can happen.
    pub fn get(&self, delta: i64) -> i64 {
        self.try_get(delta).expect("delta within the trusted range")
    }

    pub fn try_get(&self, delta: i64) -> Result<i64> {
        if delta > self.cutoff {
            return Err(Error::WindowTooNarrow {
                need_lo: delta,
                need_hi: delta,
                have_lo: 0,
                have_hi: self.cutoff,
            });
        }
        Ok(self.mults.get(&delta).copied().unwrap_or(0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.mults.iter().map(|(&d, &c)| (d, c))
    }

    /// Dense multiplicities for `delta = 0..=cutoff`.
    pub fn to_vec(&self) -> Vec<i64> {
        (0..=self.cutoff).map(|d| self.get(d)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mults.values().all(|&c| c >= 0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.mults.values().all(|&c| c == 0 || c == 1)
    }

    /// Smallest `delta` with nonzero multiplicity.
    pub fn lowest(&self) -> Option<i64> {
        self.mults.keys().next().copied()
    }

    /// Same character with a different sign on every entry.
    pub fn negate(&self) -> KCharacter {
        KCharacter {
            mults: self.mults.iter().map(|(&d, &c)| (d, -c)).collect(),
            cutoff: self.cutoff,
            is_virtual: true,
        }
    }
}

/// Integer `t`-weights with multiplicities, trusted on `window` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedTCharacter {
    mults: BTreeMap<i64, i64>,
    window: (i64, i64),
    is_virtual: bool,
}

impl TruncatedTCharacter {
    pub fn new(window: (i64, i64), is_virtual: bool) -> Self {
        TruncatedTCharacter {
            mults: BTreeMap::new(),
            window,
            is_virtual,
        }
    }

    pub fn from_pairs(
        window: (i64, i64),
        is_virtual: bool,
        pairs: impl IntoIterator<Item = (i64, i64)>,
    ) -> Result<Self> {
        let mut ch = TruncatedTCharacter::new(window, is_virtual);
        for (w, c) in pairs {
            ch.add(w, c)?;
        }
        Ok(ch)
    }

    pub fn add(&mut self, weight: i64, count: i64) -> Result<()> {
        let (lo, hi) = self.window;
        if weight < lo || weight > hi {
            return Err(Error::WindowTooNarrow {
                need_lo: weight,
                need_hi: weight,
                have_lo: lo,
                have_hi: hi,
            });
        }
        let e = self.mults.entry(weight).or_insert(0);
        *e += count;
        if *e == 0 {
            self.mults.remove(&weight);
        }
        Ok(())
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn is_virtual(&self) -> bool {
        self.is_virtual
    }

    pub fn covers(&self, lo: i64, hi: i64) -> bool {
        self.window.0 <= lo && hi <= self.window.1
    }

    pub fn require(&self, lo: i64, hi: i64) -> Result<()> {
        if self.covers(lo, hi) {
            Ok(())
        } else {
            Err(Error::WindowTooNarrow {
                need_lo: lo,
                need_hi: hi,
                have_lo: self.window.0,
                have_hi: self.window.1,
            })
        }
    }

    pub fn try_get(&self, weight: i64) -> Result<i64> {
        self.require(weight, weight)?;
        Ok(self.mults.get(&weight).copied().unwrap_or(0))
    }

    pub fn get(&self, weight: i64) -> i64 {
        self.try_get(weight).expect("weight within the trusted window")
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.mults.iter().map(|(&w, &c)| (w, c))
    }

    pub fn total(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn lowest(&self) -> Option<i64> {
        self.mults.keys().next().copied()
    }
}

/// `H^0` and `H^1` of `n_k`, the positive root line of `k`. A type `V(d)`
/// contributes weight `d` to `H^0` and `-d - 2` to `H^1`. Both results are
/// trusted on `[-cutoff - 2, cutoff]`.
pub fn nk_cohomology(m: &KCharacter) -> Result<(TruncatedTCharacter, TruncatedTCharacter)> {
    if m.is_virtual() {
        return Err(Error::VirtualNotAllowed);
    }
    let window = (-m.cutoff() - 2, m.cutoff());
    let mut h0 = TruncatedTCharacter::new(window, false);
    let mut h1 = TruncatedTCharacter::new(window, false);
    for (d, c) in m.iter() {
        h0.add(d, c)?;
        h1.add(-d - 2, c)?;
    }
    Ok((h0, h1))
}

/// Sums of all `j`-element submultisets of `weights`, with repetition.
pub(crate) fn subset_sums(weights: &[i64], j: usize) -> Vec<i64> {
    weights
        .iter()
        .combinations(j)
        .map(|c| c.into_iter().sum())
        .collect()
}

/// `dim (E_1^j)^kappa` where
/// `E_1^j = H^0(n_k, M) (x) L^j(n ∩ k^perp)* + H^1(n_k, M) (x) L^{j-1}(n ∩ k^perp)*`.
pub fn e1_page_dimension(
    m: &KCharacter,
    p: &CompatibleParabolic,
    j: i64,
    kappa: i64,
) -> Result<i64> {
    let perp = p.perp_weights();
    let r = perp.len() as i64;
    if j < 0 || j > r + 1 {
        return Err(Error::IndexOutOfRange { index: j, max: r + 1 });
    }
    let (h0, h1) = nk_cohomology(m)?;
    let mut total = 0;
    // a vector of H^i weight x paired with a dual exterior vector of weight
    // -s has weight x - s, so it sits at kappa when x = kappa + s
    let mut lookups = Vec::new();
    if j <= r {
        lookups.extend(subset_sums(&perp, j as usize).into_iter().map(|s| (0, s)));
    }
    if j >= 1 {
        lookups.extend(subset_sums(&perp, (j - 1) as usize).into_iter().map(|s| (1, s)));
    }
    if let (Some(lo), Some(hi)) = (
        lookups.iter().map(|&(_, s)| kappa + s).min(),
        lookups.iter().map(|&(_, s)| kappa + s).max(),
    ) {
        h0.require(lo, hi)?;
    }
    for (deg, s) in lookups {
        let h = if deg == 0 { &h0 } else { &h1 };
        total += h.get(kappa + s);
    }
    Ok(total)
}

/// Sufficient condition for `H^{dim n}(n, M)^kappa = 0`: the `H^1(n_k, M)`
/// weight space at `kappa + 2 rho_n^perp` vanishes.
pub fn top_n_vanishing(m: &KCharacter, p: &CompatibleParabolic, kappa: i64) -> Result<bool> {
    let shifted = kappa + p.two_rho_n_perp();
    if shifted > -2 {
        // H^1 lives in weights <= -2
        return Ok(true);
    }
    let (_, h1) = nk_cohomology(m)?;
    Ok(h1.try_get(shifted)? == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prop52Regime {
    /// `mu >= (lambda1 + lambda2) / 2`: the top cohomology is computed
    /// exactly by `H^0(n_k, M)`.
    Equality,
    /// `lambda1 / 2 <= mu < (lambda1 + lambda2) / 2`: only an upper bound.
    UpperBound,
    None,
}

pub fn prop52_regime(p: &CompatibleParabolic, mu: i64, conv: LambdaConvention) -> Prop52Regime {
    let l = p.lambdas(conv);
    let mu = Rational::from_integer(mu);
    if mu >= Rational::new(l.lambda1 + l.lambda2, 2) {
        Prop52Regime::Equality
    } else if mu >= Rational::new(l.lambda1, 2) {
        Prop52Regime::UpperBound
    } else {
        Prop52Regime::None
    }
}
