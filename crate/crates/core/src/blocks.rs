//! Central-character blocks of fundamental series modules, the composition
//! multiplicities `m(E, D)` of produced modules at rank at most two, and the
//! `k`-characters of the simple socles they determine.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use crate::charseries::{f1_k_character, ModuleDatum};
use crate::cohomology::KCharacter;
use crate::linalg::unitriangular_inverse;
use crate::parabolic::{genericity_check, CompatibleParabolic, LambdaConvention};
use crate::rootsys::{pairing, weyl_group, RootSystem, Weight, WeylElement, WeylGroup};
use crate::{Error, Rational, Result};

/// Central character `theta_kappa`, stored through the lexicographically
/// largest point of the Weyl orbit of `kappa`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacter {
    representative: Weight,
    regular: bool,
    integral: bool,
}

impl CentralCharacter {
    pub fn from_kappa(kappa: &Weight, rs: &RootSystem) -> Result<Self> {
        rs.check_dim(kappa)?;
        let w = weyl_group(rs)?;
        let orbit = w.orbit(kappa);
        let representative = orbit.last().expect("orbit is nonempty").clone();
        let integral = rs
            .roots()
            .iter()
            .all(|a| pairing(kappa, a).is_integer());
        Ok(CentralCharacter {
            representative,
            regular: orbit.len() == w.order(),
            integral,
        })
    }

    pub fn representative(&self) -> &Weight {
        &self.representative
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta{}", self.representative)
    }
}

/// `theta_{nu + rho_tilde}`.
pub fn central_character(nu: &Weight, rs: &RootSystem) -> Result<CentralCharacter> {
    rs.check_dim(nu)?;
    CentralCharacter::from_kappa(&(nu + rs.rho_tilde()), rs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockElement {
    /// Shortest `w` with `nu = w(kappa) - rho_tilde`.
    pub w: WeylElement,
    pub nu: Weight,
    pub omega: i64,
    pub mu: i64,
    pub m_dominant: bool,
    pub dim_e: i64,
    /// Number of Weyl group elements giving this `nu`.
    pub orbit_count: usize,
}

impl BlockElement {
    pub fn datum(&self) -> ModuleDatum {
        ModuleDatum {
            omega: self.omega,
            dim_e: self.dim_e,
            nu: Some(self.nu.clone()),
        }
    }
}

/// The semisimple part of `m` must be trivial or a single `sl(2)`; returns
/// its positive root in the latter case.
fn m_simple_root(p: &CompatibleParabolic) -> Result<Option<Weight>> {
    match p.m_roots() {
        [] => Ok(None),
        [a, b] if a == &-b => Ok(Some(if p.borel().is_positive_root(a) {
            a.clone()
        } else {
            b.clone()
        })),
        roots => Err(Error::UnsupportedLevi(format!(
            "m has {} roots; only m = h or m_ss = sl(2) are supported",
            roots.len()
        ))),
    }
}

/// All `nu = w(kappa) - rho_tilde` over the Weyl group with integral
/// `omega = nu(h)`, merged when equal, sorted by ascending `mu` and then by
/// descending `nu`. When `m` is not a Cartan only `m`-dominant integral `nu`
/// are kept, with `dim E` from the rank-one dimension formula.
pub fn enumerate_block(kappa: &CentralCharacter, p: &CompatibleParabolic) -> Result<Vec<BlockElement>> {
    let gamma = m_simple_root(p)?;
    let borel = p.borel();
    let w = weyl_group(borel)?;
    let rho = borel.rho_tilde();
    let two = p.two_rho_n_perp();
    let mut merged: BTreeMap<Weight, BlockElement> = BTreeMap::new();
    for (x, pt) in w.orbit_pairs(kappa.representative()) {
        let nu = &pt - rho;
        let omega = p.embedding().eval(&nu);
        if !omega.is_integer() {
            continue;
        }
        let dim_e = match &gamma {
            None => 1,
            Some(g) => {
                let c = pairing(&nu, g);
                if !c.is_integer() || c.is_negative() {
                    continue;
                }
                c.to_integer() + 1
            }
        };
        merged
            .entry(nu.clone())
            .and_modify(|e| e.orbit_count += 1)
            .or_insert_with(|| BlockElement {
                w: x,
                nu,
                omega: omega.to_integer(),
                mu: omega.to_integer() + two,
                m_dominant: true,
                dim_e,
                orbit_count: 1,
            });
    }
    let mut out: Vec<BlockElement> = merged.into_values().collect();
    out.sort_by(|a, b| a.mu.cmp(&b.mu).then_with(|| b.nu.cmp(&a.nu)));
    Ok(out)
}

/// Group generated by the reflections `s_alpha` with `<kappa, alpha^vee>`
/// integral, with positive system taken from `rs`.
pub fn integral_weyl_subgroup(kappa: &Weight, rs: &RootSystem) -> Result<WeylGroup> {
    rs.check_dim(kappa)?;
    let pos = rs
        .positive_roots()
        .iter()
        .filter(|a| pairing(kappa, a).is_integer())
        .cloned()
        .collect();
    WeylGroup::from_positive_roots(rs.ambient_dim(), pos)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityMatrix {
    elements: Vec<BlockElement>,
    m: Vec<Vec<i64>>,
    p: Vec<Vec<i64>>,
    classes: Vec<usize>,
}

impl MultiplicityMatrix {
    pub fn elements(&self) -> &[BlockElement] {
        &self.elements
    }

    /// `m[E][D] = [N_p(E) : L_p(D)]`, rows and columns in element order.
    pub fn m_matrix(&self) -> &[Vec<i64>] {
        &self.m
    }

    pub fn p_matrix(&self) -> &[Vec<i64>] {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Linkage class of each element: elements in different classes have
    /// no multiplicities between them.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn subblocks(&self) -> Vec<Vec<usize>> {
        let mut by: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &c) in self.classes.iter().enumerate() {
            by.entry(c).or_default().push(i);
        }
        by.into_values().collect()
    }

    /// Indices of elements with the given minimal `k`-type.
    pub fn indices_with_mu(&self, mu: i64) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.elements[i].mu == mu).collect()
    }
}

/// Composition multiplicities for a regular block with `m = h` at rank at
/// most two. With `xi_X = -(nu_X + rho_tilde)` and `W_E` the integral Weyl
/// group of `xi_E`, `m(E, D) = 1` exactly when `xi_D = y xi_dom` and
/// `xi_E = x xi_dom` with `x <= y` in the Bruhat order of `W_E`, where
/// `xi_dom` is the `W_E`-dominant point. Kazhdan-Lusztig polynomials are
/// all 1 for these groups.
pub fn multiplicity_matrix(kappa: &CentralCharacter, p: &CompatibleParabolic) -> Result<MultiplicityMatrix> {
    if !p.m_is_cartan() {
        return Err(Error::UnsupportedLevi(format!(
            "m has {} roots; multiplicities need m = h",
            p.m_roots().len()
        )));
    }
    let borel = p.borel();
    if borel.rank() > 2 {
        return Err(Error::UnsupportedRank(borel.rank()));
    }
    if !kappa.is_regular() {
        return Err(Error::SingularBlockUnsupported(kappa.representative().to_string()));
    }
    let elements = enumerate_block(kappa, p)?;
    let n = elements.len();
    let rho = borel.rho_tilde();
    let xi: Vec<Weight> = elements.iter().map(|e| -&(&e.nu + rho)).collect();

    let mut m = vec![vec![0i64; n]; n];
    let mut classes = vec![usize::MAX; n];
    let mut next_class = 0;
    for i in 0..n {
        let we = integral_weyl_subgroup(&xi[i], borel)?;
        let dom = we
            .orbit(&xi[i])
            .into_iter()
            .find(|pt| we.positive_roots().iter().all(|a| pt.dot(a).is_positive()))
            .ok_or_else(|| Error::InternalError(format!("no dominant point for {}", xi[i])))?;
        let position = |target: &Weight| we.elements().iter().find(|x| x.act(&dom) == *target);
        let x = position(&xi[i]).expect("xi lies in its own orbit");
        if classes[i] == usize::MAX {
            classes[i] = next_class;
            next_class += 1;
        }
        for j in 0..n {
            let Some(y) = position(&xi[j]) else { continue };
            classes[j] = classes[i];
            if we.bruhat_leq(x, y)? {
                m[i][j] = 1;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && m[i][j] != 0 && elements[j].mu <= elements[i].mu {
                return Err(Error::InternalInconsistency(format!(
                    "m(E, D) = {} with mu_E = {} and mu_D = {}",
                    m[i][j], elements[i].mu, elements[j].mu
                )));
            }
        }
    }
    let p_matrix = unitriangular_inverse(&m)
        .ok_or_else(|| Error::InternalInconsistency("m is not unitriangular".into()))?;
    Ok(MultiplicityMatrix {
        elements,
        m,
        p: p_matrix,
        classes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SocleRegime {
    /// `mu >= lambda1 / 2`: the character is that of the simple socle of
    /// `F^1(p, E)`.
    Socle,
    /// `0 <= mu < lambda1 / 2`: the character of `R^1 Gamma(L_p(E))`, which
    /// contains the socle.
    RGammaOfL,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleCharacter {
    pub index: usize,
    pub mu: i64,
    pub character: KCharacter,
    pub regime: SocleRegime,
}

/// `sum_D p(E, D) ch_k F^1(p, D)` for the element at `index`.
pub fn socle_k_character(
    p: &CompatibleParabolic,
    mm: &MultiplicityMatrix,
    index: usize,
    cutoff: i64,
    conv: LambdaConvention,
) -> Result<SocleCharacter> {
    let e = mm.elements.get(index).ok_or(Error::IndexOutOfRange {
        index: index as i64,
        max: mm.len() as i64 - 1,
    })?;
    if e.mu < 0 {
        return Err(Error::OutOfRegime(format!(
            "minimal k-type {} is negative",
            e.mu
        )));
    }
    let mut acc = vec![0i64; usize::try_from(cutoff + 1).unwrap_or(0)];
    for (j, &c) in mm.p[index].iter().enumerate() {
        if c == 0 {
            continue;
        }
        let f1 = f1_k_character(p, &mm.elements[j].datum(), cutoff)?;
        for (d, v) in f1.iter() {
            acc[d as usize] += c * v;
        }
    }
    if let Some((d, c)) = acc.iter().enumerate().find(|(_, &c)| c < 0) {
        return Err(Error::InternalInconsistency(format!(
            "negative coefficient {c} at V({d}) in the socle character"
        )));
    }
    let character = KCharacter::from_pairs(
        cutoff,
        false,
        acc.into_iter().enumerate().map(|(d, c)| (d as i64, c)),
    )?;
    let half_l1 = Rational::new(p.lambdas(conv).lambda1, 2);
    let regime = if Rational::from_integer(e.mu) >= half_l1 {
        SocleRegime::Socle
    } else {
        SocleRegime::RGammaOfL
    };
    Ok(SocleCharacter {
        index,
        mu: e.mu,
        character,
        regime,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReconstructibilityRegime {
    /// `mu >= (lambda1 + lambda2) / 2`.
    Strong,
    /// `lambda1 / 2 <= mu < (lambda1 + lambda2) / 2`.
    SocleSimple,
    /// `0 <= mu < lambda1 / 2`: weak reconstructibility only.
    WeakOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructibilityReport {
    pub mu: i64,
    pub convention: LambdaConvention,
    /// `F^0(p, E) = F^2(p, E) = 0`.
    pub f0_f2_vanish: bool,
    pub socle_simple: bool,
    pub strong_bijection: bool,
    pub generic: bool,
    /// `k` is regular in `g`, so the sharper regular-case bounds apply.
    pub regular_k: bool,
    pub regime: ReconstructibilityRegime,
}

pub fn reconstructibility_report(
    p: &CompatibleParabolic,
    mu: i64,
    conv: LambdaConvention,
) -> Result<ReconstructibilityReport> {
    let generic = genericity_check(p, mu)?.generic;
    let l = p.lambdas(conv);
    let q = Rational::from_integer(mu);
    let socle_simple = q >= Rational::new(l.lambda1, 2);
    let strong_bijection = q >= Rational::new(l.lambda1 + l.lambda2, 2);
    let regime = if strong_bijection {
        ReconstructibilityRegime::Strong
    } else if socle_simple {
        ReconstructibilityRegime::SocleSimple
    } else {
        ReconstructibilityRegime::WeakOnly
    };
    Ok(ReconstructibilityReport {
        mu,
        convention: conv,
        f0_f2_vanish: true,
        socle_simple,
        strong_bijection,
        generic,
        regular_k: p.embedding().is_regular(),
        regime,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IwasawaSupport {
    pub a: i64,
    /// `c - 3a + 6j` for `0 <= j <= a`, ascending.
    pub b_values: Vec<Rational>,
    /// Multiplicity of `V(a)` after restriction to `k`.
    pub k_multiplicity: i64,
}

/// `b`-parameters of the `g`-types `a rho + b zeta` occurring in the
/// principal series of `sl(3)` attached to the root `sl(2)`, for the
/// character with `chi(h_I) = c`.
pub fn iwasawa_sl3_support(a: i64, c: Rational) -> Result<IwasawaSupport> {
    if a < 0 {
        return Err(Error::InvalidInput(format!("a must be nonnegative, got {a}")));
    }
    let b_values = (0..=a)
        .map(|j| c - Rational::from_integer(3 * a) + Rational::from_integer(6 * j))
        .collect();
    Ok(IwasawaSupport {
        a,
        b_values,
        k_multiplicity: a + 1,
    })
}
