//! `sl(2)`-subalgebras given by their semisimple element `h`, the induced
//! integral grading of `g`, and the decomposition of `g` into `sl(2)`-types.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::solve;
use crate::rootsys::{coroot, pairing, RootSystem, Weight};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingKind {
    Principal,
    Root(Weight),
    Explicit,
}

impl fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingKind::Principal => write!(f, "principal"),
            EmbeddingKind::Root(b) => write!(f, "root {b}"),
            EmbeddingKind::Explicit => write!(f, "explicit"),
        }
    }
}

/// An `sl(2)`-subalgebra `k` of `g`, recorded through `h`. The vector `h`
/// lives in the same coordinates as the roots and `alpha(h) = <alpha, h>`.
/// It is stored projected onto the span of the coroots.
#[derive(Clone, Debug)]
pub struct Sl2Embedding {
    rs: RootSystem,
    h: Weight,
    kind: EmbeddingKind,
    root_values: Vec<i64>,
}

impl Sl2Embedding {
    /// `h = sum of the positive coroots`, so every simple root takes the
    /// value 2.
    pub fn from_principal(rs: &RootSystem) -> Result<Self> {
        let h = rs
            .positive_roots()
            .iter()
            .fold(Weight::zero(rs.ambient_dim()), |acc, a| &acc + &coroot(a));
        for a in rs.simple_roots() {
            if a.dot(&h) != Rational::from_integer(2) {
                return Err(Error::InternalError(format!(
                    "simple root {a} does not take the value 2 on the principal element"
                )));
            }
        }
        Self::build(rs, h, EmbeddingKind::Principal)
    }

    /// `h = beta^vee`.
    pub fn from_root(rs: &RootSystem, beta: &Weight) -> Result<Self> {
        rs.check_dim(beta)?;
        if !rs.is_root(beta) {
            return Err(Error::NotARoot(beta.to_string()));
        }
        Self::build(rs, coroot(beta), EmbeddingKind::Root(beta.clone()))
    }

    pub fn from_defining_vector(rs: &RootSystem, h: &Weight) -> Result<Self> {
        rs.check_dim(h)?;
        Self::build(rs, h.clone(), EmbeddingKind::Explicit)
    }

    fn build(rs: &RootSystem, h: Weight, kind: EmbeddingKind) -> Result<Self> {
        let mut root_values = Vec::with_capacity(rs.roots().len());
        for a in rs.roots() {
            let v = a.dot(&h);
            if !v.is_integer() {
                return Err(Error::NonIntegralGrading {
                    root: a.to_string(),
                    value: crate::rootsys::fmt_rational(&v),
                });
            }
            root_values.push(v.to_integer());
        }
        if !root_values.contains(&2) {
            return Err(Error::NoSl2Triple);
        }
        let coeffs = coroot_coordinates(rs, &h)?;
        let mut e = Sl2Embedding {
            rs: rs.clone(),
            h: h.clone(),
            kind,
            root_values,
        };
        sl2_decomposition(&t_character_of_g(&e))?;
        // Dynkin: relative to the positive system h defines, the simple
        // roots take values in {0, 1, 2}
        let oriented = rs.oriented_by(&h)?;
        if let Some(a) = oriented
            .simple_roots()
            .iter()
            .find(|a| a.dot(&h) > Rational::from_integer(2))
        {
            return Err(Error::NotACharacteristic(format!(
                "simple root {a} takes the value {}",
                crate::rootsys::fmt_rational(&a.dot(&h))
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| !c.is_integer()) {
            return Err(Error::NotInCorootLattice(format!(
                "{h} has coefficient {} on a simple coroot",
                crate::rootsys::fmt_rational(c)
            )));
        }
        e.h = rs
            .simple_roots()
            .iter()
            .zip(&coeffs)
            .fold(Weight::zero(rs.ambient_dim()), |acc, (a, &c)| {
                &acc + &coroot(a).scale(c)
            });
        Ok(e)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn h(&self) -> &Weight {
        &self.h
    }

    pub fn kind(&self) -> &EmbeddingKind {
        &self.kind
    }

    /// `alpha(h)` for an arbitrary weight, exact.
    pub fn eval(&self, w: &Weight) -> Rational {
        w.dot(&self.h)
    }

    /// Pairs `(alpha, alpha(h))` for every root, in the root system's order.
    pub fn graded_roots(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.rs.roots().iter().zip(self.root_values.iter().copied())
    }

    /// Coefficients of `h` in the simple coroots of the default positive
    /// system.
    pub fn coroot_coefficients(&self) -> Vec<Rational> {
        coroot_coordinates(&self.rs, &self.h).expect("validated at construction")
    }

    pub fn is_regular(&self) -> bool {
        is_regular(self)
    }
}

fn coroot_coordinates(rs: &RootSystem, h: &Weight) -> Result<Vec<Rational>> {
    // alpha_j(h) = sum_i c_i <alpha_j, alpha_i^vee>
    let simple = rs.simple_roots();
    let a: Vec<Vec<Rational>> = simple
        .iter()
        .map(|aj| simple.iter().map(|ai| pairing(aj, ai)).collect())
        .collect();
    let b: Vec<Rational> = simple.iter().map(|aj| aj.dot(h)).collect();
    solve(&a, &b).ok_or_else(|| Error::InternalError("singular Cartan matrix".into()))
}

pub fn is_regular(e: &Sl2Embedding) -> bool {
    e.root_values.iter().all(|&v| v != 0)
}

/// A finite map from integer `t`-weights to multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteTCharacter {
    mults: BTreeMap<i64, i64>,
}

impl FiniteTCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, weight: i64, count: i64) {
        let e = self.mults.entry(weight).or_insert(0);
        *e += count;
        if *e == 0 {
            self.mults.remove(&weight);
        }
    }

    pub fn mult(&self, weight: i64) -> i64 {
        self.mults.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.mults.iter().all(|(&w, &c)| self.mult(-w) == c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.mults.iter().map(|(&w, &c)| (w, c))
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.mults.keys().next_back().copied()
    }
}

impl FromIterator<(i64, i64)> for FiniteTCharacter {
    fn from_iter<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut ch = FiniteTCharacter::new();
        for (w, c) in iter {
            ch.add(w, c);
        }
        ch
    }
}

pub fn t_character_of_g(e: &Sl2Embedding) -> FiniteTCharacter {
    let mut ch: FiniteTCharacter = e.root_values.iter().map(|&v| (v, 1)).collect();
    ch.add(0, e.rs.rank() as i64);
    ch
}

/// `g` as a sum of `sl(2)`-types: `m -> number of copies of V(m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sl2Decomposition {
    counts: BTreeMap<i64, i64>,
}

impl Sl2Decomposition {
    pub fn count(&self, m: i64) -> i64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.counts.iter().map(|(&m, &c)| (m, c))
    }

    pub fn dim(&self) -> i64 {
        self.iter().map(|(m, c)| c * (m + 1)).sum()
    }

    /// Expands back to weights `-m, -m+2, ..., m` for each summand.
    pub fn to_t_character(&self) -> FiniteTCharacter {
        let mut ch = FiniteTCharacter::new();
        for (m, c) in self.iter() {
            for j in 0..=m {
                ch.add(m - 2 * j, c);
            }
        }
        ch
    }
}

impl fmt::Display for Sl2Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .rev()
            .map(|(m, c)| if c == 1 { format!("V({m})") } else { format!("{c}V({m})") })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn sl2_decomposition(ch: &FiniteTCharacter) -> Result<Sl2Decomposition> {
    if !ch.is_symmetric() {
        return Err(Error::NotIntegrable("t-character is not symmetric".into()));
    }
    let mut counts = BTreeMap::new();
    let top = ch.max_weight().unwrap_or(0).max(0);
    for m in 0..=top {
        let c = ch.mult(m) - ch.mult(m + 2);
        if c < 0 {
            return Err(Error::NotIntegrable(format!(
                "weight {m} has multiplicity {} but weight {} has {}",
                ch.mult(m),
                m + 2,
                ch.mult(m + 2)
            )));
        }
        if !c.is_zero() {
            counts.insert(m, c);
        }
    }
    Ok(Sl2Decomposition { counts })
}
