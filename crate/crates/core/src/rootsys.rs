//! Root systems of types A, B, C, D, G2 and their direct sums, realized in
//! the standard epsilon-basis, together with Weyl groups, Bruhat order and
//! orbits of weights. Everything is exact.
//!
//! The bilinear form is the standard one, `<e_i, e_j> = delta_ij`, in every
//! type. It differs from the normalization with long roots of square length
//! two by a positive scalar on each simple factor, which does not affect any
//! sign, dominance or integrality test made downstream.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::linalg::RatMatrix;
use crate::{Error, Rational, Result};

/// Default ceiling on the total rank accepted by [`build_root_system`].
pub const DEFAULT_MAX_RANK: usize = 4;

const INPUT_BOUND: i64 = 1_000_000_000;

/// Parses `"p/q"` or `"p"` into an exact rational. Numerators and
/// denominators are bounded so that downstream `i64` arithmetic cannot
/// overflow.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let q = Rational::from_str(s)
        .map_err(|_| Error::InvalidInput(format!("cannot parse '{s}' as a rational number")))?;
    if q.numer().abs() > INPUT_BOUND || *q.denom() > INPUT_BOUND {
        return Err(Error::InvalidInput(format!(
            "'{s}' exceeds the supported magnitude {INPUT_BOUND}"
        )));
    }
    Ok(q)
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A vector of exact rationals in the epsilon-basis of the ambient space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    /// Parses a comma separated list such as `3/2,1/2`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::InvalidInput("empty weight".into()));
        }
        Ok(Weight(coords))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Rational) -> Weight {
        Weight(self.0.iter().map(|&x| x * c).collect())
    }

    /// Inner product without the dimension check; callers guarantee equal
    /// ambient dimension.
    pub(crate) fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (&a, &b)| acc + a * b)
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    /// First non-zero coordinate is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_positive())
    }

    pub fn apply(&self, m: &RatMatrix) -> Weight {
        Weight(m.apply(&self.0))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rational(x))?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|&a| -a).collect())
    }
}

/// The form `<a, b>`; symmetric, positive definite.
pub fn inner_product(a: &Weight, b: &Weight) -> Result<Rational> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.dot(b))
}

/// `2 alpha / <alpha, alpha>`.
pub fn coroot(alpha: &Weight) -> Weight {
    alpha.scale(Rational::from_integer(2) / alpha.norm2())
}

/// `<x, alpha^vee>`.
pub fn pairing(x: &Weight, alpha: &Weight) -> Rational {
    Rational::from_integer(2) * x.dot(alpha) / alpha.norm2()
}

pub fn reflect(x: &Weight, alpha: &Weight) -> Weight {
    x - &alpha.scale(pairing(x, alpha))
}

pub fn reflection_matrix(alpha: &Weight) -> RatMatrix {
    let n = alpha.dim();
    let c = coroot(alpha);
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = if i == j { Rational::from_integer(1) } else { Rational::zero() };
                    d - alpha.coords()[i] * c.coords()[j]
                })
                .collect()
        })
        .collect();
    RatMatrix::from_rows(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimpleFactor {
    pub family: Family,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(family: Family, rank: usize) -> Self {
        SimpleFactor { family, rank }
    }

    /// Number of epsilon-coordinates used by the standard realization.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::G => 3,
            _ => self.rank,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.family {
            Family::A => self.rank >= 1,
            Family::B | Family::C => self.rank >= 2,
            Family::D => self.rank >= 3,
            Family::G => self.rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedAlgebra(format!("{self}")))
        }
    }

    fn roots(&self) -> Vec<Vec<i64>> {
        let n = self.ambient_dim();
        let unit = |i: usize, c: i64| {
            let mut v = vec![0i64; n];
            v[i] = c;
            v
        };
        let pair = |i: usize, a: i64, j: usize, b: i64| {
            let mut v = vec![0i64; n];
            v[i] += a;
            v[j] += b;
            v
        };
        let mut out = Vec::new();
        match self.family {
            Family::A => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            out.push(pair(i, 1, j, -1));
                        }
                    }
                }
            }
            Family::B | Family::C | Family::D => {
                for i in 0..n {
                    for j in i + 1..n {
                        for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            out.push(pair(i, a, j, b));
                        }
                    }
                    match self.family {
                        Family::B => {
                            out.push(unit(i, 1));
                            out.push(unit(i, -1));
                        }
                        Family::C => {
                            out.push(unit(i, 2));
                            out.push(unit(i, -2));
                        }
                        _ => {}
                    }
                }
            }
            Family::G => {
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            out.push(pair(i, 1, j, -1));
                        }
                    }
                    let mut long = vec![-1i64; 3];
                    long[i] = 2;
                    out.push(long.clone());
                    out.push(long.iter().map(|x| -x).collect());
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Parses `C2`, `A1+A1` (also `A1xA1`) into a list of simple factors.
pub fn parse_type_label(s: &str) -> Result<Vec<SimpleFactor>> {
    let mut out = Vec::new();
    for (pos, part) in s.split(['+', 'x']).enumerate() {
        let part = part.trim();
        let mut chars = part.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('G') => Family::G,
            _ => {
                return Err(Error::InvalidInput(format!(
                    "factor {} of '{s}': expected a family letter A-D or G, found '{part}'",
                    pos + 1
                )))
            }
        };
        let rank: usize = chars.as_str().parse().map_err(|_| {
            Error::InvalidInput(format!(
                "factor {} of '{s}': cannot read a rank from '{part}'",
                pos + 1
            ))
        })?;
        out.push(SimpleFactor { family, rank });
    }
    Ok(out)
}

/// A root system with a chosen positive system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    factors: Vec<SimpleFactor>,
    ambient_dim: usize,
    roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    simple_roots: Vec<Weight>,
    rho_tilde: Weight,
}

pub fn build_root_system(spec: &[SimpleFactor]) -> Result<RootSystem> {
    build_root_system_with_ceiling(spec, DEFAULT_MAX_RANK)
}

pub fn build_root_system_with_ceiling(spec: &[SimpleFactor], max_rank: usize) -> Result<RootSystem> {
    if spec.is_empty() {
        return Err(Error::UnsupportedAlgebra("empty type label".into()));
    }
    for f in spec {
        f.validate()?;
    }
    let total: usize = spec.iter().map(|f| f.rank).sum();
    if total > max_rank {
        return Err(Error::UnsupportedAlgebra(format!(
            "total rank {total} exceeds the ceiling {max_rank}"
        )));
    }
    let ambient_dim: usize = spec.iter().map(SimpleFactor::ambient_dim).sum();
    let mut roots = Vec::new();
    let mut offset = 0;
    for f in spec {
        for r in f.roots() {
            let mut v = vec![0i64; ambient_dim];
            v[offset..offset + r.len()].copy_from_slice(&r);
            roots.push(Weight::from_ints(&v));
        }
        offset += f.ambient_dim();
    }
    roots.sort();
    let mut rs = RootSystem {
        factors: spec.to_vec(),
        ambient_dim,
        roots,
        positive_roots: Vec::new(),
        simple_roots: Vec::new(),
        rho_tilde: Weight::zero(ambient_dim),
    };
    rs.orient(|a| a.is_lex_positive());
    Ok(rs)
}

impl RootSystem {
    fn orient(&mut self, positive: impl Fn(&Weight) -> bool) {
        self.positive_roots = self.roots.iter().filter(|a| positive(a)).cloned().collect();
        let pos: HashSet<&Weight> = self.positive_roots.iter().collect();
        self.simple_roots = self
            .positive_roots
            .iter()
            .filter(|a| {
                !self
                    .positive_roots
                    .iter()
                    .any(|b| pos.contains(&(*a - b)) && b != *a)
            })
            .cloned()
            .collect();
        let sum = self
            .positive_roots
            .iter()
            .fold(Weight::zero(self.ambient_dim), |acc, a| &acc + a);
        self.rho_tilde = sum.scale(Rational::new(1, 2));
    }

    /// The same roots with positivity re-derived from `h`: a root is positive
    /// if it is positive on `h`, ties at zero broken lexicographically.
    pub fn oriented_by(&self, h: &Weight) -> Result<RootSystem> {
        self.check_dim(h)?;
        let mut rs = self.clone();
        rs.orient(|a| {
            let v = a.dot(h);
            v.is_positive() || (v.is_zero() && a.is_lex_positive())
        });
        Ok(rs)
    }

    pub fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.ambient_dim {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: w.dim(),
            })
        } else {
            Ok(())
        }
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn type_label(&self) -> String {
        self.factors
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn dim_g(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn rho_tilde(&self) -> &Weight {
        &self.rho_tilde
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.roots.binary_search(w).is_ok()
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_roots.contains(w)
    }

    /// `<alpha_i, alpha_j^vee>` over the simple roots.
    pub fn cartan_matrix(&self) -> Vec<Vec<Rational>> {
        self.simple_roots
            .iter()
            .map(|a| self.simple_roots.iter().map(|b| pairing(a, b)).collect())
            .collect()
    }
}

/// An element of a Weyl group, stored as its matrix on epsilon-coordinates.
/// `length` is relative to the positive system of the group it came from.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: RatMatrix,
    length: usize,
}

impl WeylElement {
    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn act(&self, w: &Weight) -> Weight {
        w.apply(&self.matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len={}, {:?})", self.length, self.matrix)
    }
}

/// A finite reflection group generated by the reflections in a positive
/// system of roots. Used both for the full Weyl group and for integral
/// subgroups.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    positive_roots: Vec<Weight>,
    simple_roots: Vec<Weight>,
    elements: Vec<WeylElement>,
    index: HashMap<RatMatrix, usize>,
}

impl WeylGroup {
    /// Builds the group generated by reflections in `positive_roots`, which
    /// must be the positive part of a root (sub)system closed under its own
    /// reflections.
    pub fn from_positive_roots(ambient_dim: usize, positive_roots: Vec<Weight>) -> Result<Self> {
        let pos: HashSet<Weight> = positive_roots.iter().cloned().collect();
        let length_of = |m: &RatMatrix| -> usize {
            positive_roots
                .iter()
                .filter(|a| !pos.contains(&a.apply(m)))
                .count()
        };
        let simple_roots: Vec<Weight> = positive_roots
            .iter()
            .filter(|a| length_of(&reflection_matrix(a)) == 1)
            .cloned()
            .collect();
        let gens: Vec<RatMatrix> = simple_roots.iter().map(reflection_matrix).collect();

        let id = RatMatrix::identity(ambient_dim);
        let mut seen: HashSet<RatMatrix> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(m) = queue.pop_front() {
            for g in &gens {
                let next = g * &m;
                if seen.insert(next.clone()) {
                    order.push(next.clone());
                    queue.push_back(next);
                }
            }
            if order.len() > 100_000 {
                return Err(Error::InternalError("reflection group is not finite".into()));
            }
        }
        let mut elements: Vec<WeylElement> = order
            .into_iter()
            .map(|m| {
                let length = length_of(&m);
                WeylElement { matrix: m, length }
            })
            .collect();
        elements.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| b.matrix.cmp(&a.matrix)));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.matrix.clone(), i))
            .collect();
        Ok(WeylGroup {
            positive_roots,
            simple_roots,
            elements,
            index,
        })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn contains(&self, x: &WeylElement) -> bool {
        self.index.get(&x.matrix).is_some_and(|&i| self.elements[i].length == x.length)
    }

    /// Looks up the group element with the given matrix.
    pub fn element(&self, m: &RatMatrix) -> Option<&WeylElement> {
        self.index.get(m).map(|&i| &self.elements[i])
    }

    pub fn simple_reflections(&self) -> Vec<&WeylElement> {
        self.simple_roots
            .iter()
            .map(|a| self.element(&reflection_matrix(a)).expect("simple reflection in group"))
            .collect()
    }

    pub fn reflections(&self) -> Vec<&WeylElement> {
        self.positive_roots
            .iter()
            .map(|a| self.element(&reflection_matrix(a)).expect("reflection in group"))
            .collect()
    }

    pub fn multiply(&self, x: &WeylElement, y: &WeylElement) -> &WeylElement {
        self.element(&(&x.matrix * &y.matrix)).expect("group is closed")
    }

    /// Bruhat order. For groups of rank at most two (dihedral, including
    /// `A1 x A1`) this is `x = y` or `l(x) < l(y)`. In higher rank it is the
    /// transitive closure of `z < tz` for reflections `t` with
    /// `l(tz) > l(z)`.
    pub fn bruhat_leq(&self, x: &WeylElement, y: &WeylElement) -> Result<bool> {
        if !self.contains(x) || !self.contains(y) {
            return Err(Error::GroupMismatch);
        }
        if x == y {
            return Ok(true);
        }
        if x.length >= y.length {
            return Ok(false);
        }
        if self.rank() <= 2 {
            return Ok(true);
        }
        let refl: Vec<&WeylElement> = self.reflections();
        let mut seen: HashSet<&RatMatrix> = HashSet::from([&x.matrix]);
        let mut queue = VecDeque::from([x]);
        while let Some(z) = queue.pop_front() {
            for t in &refl {
                let tz = self.multiply(t, z);
                if tz.length > z.length && tz.length <= y.length && seen.insert(&tz.matrix) {
                    if tz == y {
                        return Ok(true);
                    }
                    queue.push_back(tz);
                }
            }
        }
        Ok(false)
    }

    /// All pairs `(w, w(v))`, one per group element.
    pub fn orbit_pairs(&self, v: &Weight) -> Vec<(WeylElement, Weight)> {
        self.elements.iter().map(|w| (w.clone(), w.act(v))).collect()
    }

    /// Distinct points of the orbit, sorted.
    pub fn orbit(&self, v: &Weight) -> Vec<Weight> {
        let mut pts: Vec<Weight> = self.elements.iter().map(|w| w.act(v)).collect();
        pts.sort();
        pts.dedup();
        pts
    }

    pub fn stabilizer_order(&self, v: &Weight) -> usize {
        self.elements.iter().filter(|w| w.act(v) == *v).count()
    }
}

pub fn weyl_group(rs: &RootSystem) -> Result<WeylGroup> {
    WeylGroup::from_positive_roots(rs.ambient_dim(), rs.positive_roots().to_vec())
}

/// All pairs `(w, w(kappa))` over the Weyl group. `theta_{k1} = theta_{k2}`
/// exactly when `k2` occurs among the returned points for `k1`.
pub fn dot_orbit(kappa: &Weight, rs: &RootSystem) -> Result<Vec<(WeylElement, Weight)>> {
    rs.check_dim(kappa)?;
    Ok(weyl_group(rs)?.orbit_pairs(kappa))
}
