//! Serializable report documents. Every rational is a string `p/q` (or `p`
//! when integral), so documents round-trip without loss.

use serde::{Deserialize, Serialize};

use ghcseries::blocks::{ReconstructibilityRegime, SocleRegime};
use ghcseries::parabolic::{GenericityWitness, Lambdas, LambdaBounds, Threshold};
use ghcseries::rootsys::fmt_rational;
use ghcseries::{KCharacter, Prop52Regime, Rational, TruncatedTCharacter, Weight};

pub fn q(x: &Rational) -> String {
    fmt_rational(x)
}

pub fn weight(w: &Weight) -> Vec<String> {
    w.coords().iter().map(q).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Document {
    Analyze(AnalyzeReport),
    Character(CharacterReport),
    Block(BlockReport),
    Socle(SocleReport),
    Iwasawa(IwasawaReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairInfo {
    pub fixture: Option<String>,
    pub algebra: String,
    pub embedding: String,
    pub h: Vec<String>,
    pub h_coroot_coefficients: Vec<String>,
    pub regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaPair {
    pub lambda1: i64,
    pub lambda2: i64,
    pub lambda2_defaulted: bool,
}

impl From<Lambdas> for LambdaPair {
    fn from(l: Lambdas) -> Self {
        LambdaPair {
            lambda1: l.lambda1,
            lambda2: l.lambda2,
            lambda2_defaulted: l.lambda2_defaulted,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub rho_n: String,
    pub rho: i64,
    pub two_rho_n_perp: i64,
    pub rho_tilde_n: Vec<String>,
    pub r: usize,
    pub s: usize,
    pub n_weights: Vec<i64>,
    pub perp_weights: Vec<i64>,
    pub m_is_cartan: bool,
    pub lambdas_n: LambdaPair,
    pub lambdas_perp: LambdaPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdDoc {
    pub value: String,
    pub min_mu: i64,
}

impl From<Threshold> for ThresholdDoc {
    fn from(t: Threshold) -> Self {
        ThresholdDoc {
            value: q(&t.value),
            min_mu: t.min_mu,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaBoundsDoc {
    pub socle: ThresholdDoc,
    pub strong: ThresholdDoc,
}

impl From<LambdaBounds> for LambdaBoundsDoc {
    fn from(b: LambdaBounds) -> Self {
        LambdaBoundsDoc {
            socle: b.socle.into(),
            strong: b.strong.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PriorWorkDoc {
    pub r: Vec<String>,
    pub threshold: ThresholdDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub weak: ThresholdDoc,
    pub generic: ThresholdDoc,
    pub n: LambdaBoundsDoc,
    pub perp: LambdaBoundsDoc,
    pub prior_work: Option<PriorWorkDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum WitnessDoc {
    Condition1 { value: String },
    Condition2 { subset: Vec<i64>, value: String },
}

impl From<&GenericityWitness> for WitnessDoc {
    fn from(w: &GenericityWitness) -> Self {
        match w {
            GenericityWitness::Condition1 { value } => WitnessDoc::Condition1 { value: q(value) },
            GenericityWitness::Condition2 { subset, value } => WitnessDoc::Condition2 {
                subset: subset.clone(),
                value: q(value),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuAnalysis {
    pub mu: i64,
    pub omega: i64,
    pub generic: bool,
    pub genericity_witness: Option<WitnessDoc>,
    pub top_cohomology: String,
    pub socle_simple: bool,
    pub strong_bijection: bool,
    pub reconstructibility: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub pair: PairInfo,
    pub lambda_convention: String,
    pub g_decomposition: Vec<(i64, i64)>,
    pub g_decomposition_text: String,
    pub invariants: Invariants,
    pub bounds: Bounds,
    pub mu: Option<MuAnalysis>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TCharacterDoc {
    pub window: (i64, i64),
    /// Nonzero `(weight, multiplicity)` pairs in ascending weight order.
    pub entries: Vec<(i64, i64)>,
}

impl From<&TruncatedTCharacter> for TCharacterDoc {
    fn from(c: &TruncatedTCharacter) -> Self {
        TCharacterDoc {
            window: c.window(),
            entries: c.iter().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KCharacterDoc {
    pub cutoff: i64,
    pub is_virtual: bool,
    /// Multiplicity of `V(delta)` at index `delta`, for `0 <= delta <= cutoff`.
    pub multiplicities: Vec<i64>,
    pub lowest: Option<i64>,
    pub multiplicity_free: bool,
}

impl From<&KCharacter> for KCharacterDoc {
    fn from(c: &KCharacter) -> Self {
        KCharacterDoc {
            cutoff: c.cutoff(),
            is_virtual: c.is_virtual(),
            multiplicities: c.to_vec(),
            lowest: c.lowest(),
            multiplicity_free: c.is_multiplicity_free(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub pair: PairInfo,
    pub mu: i64,
    pub omega: i64,
    pub dim_e: i64,
    pub n_character: TCharacterDoc,
    /// `F^1` when `mu >= 0`, otherwise the virtual Euler characteristic
    /// with the sign of `F^1`.
    pub k_character: KCharacterDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylDoc {
    pub length: usize,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub index: usize,
    pub w: WeylDoc,
    pub nu: Vec<String>,
    pub omega: i64,
    pub mu: i64,
    pub m_dominant: bool,
    pub dim_e: i64,
    pub orbit_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub pair: PairInfo,
    pub kappa: Vec<String>,
    pub central_character: Vec<String>,
    pub regular: bool,
    pub integral: bool,
    pub elements: Vec<BlockRow>,
    pub mu_multiset: Vec<i64>,
    pub m_matrix: Option<Vec<Vec<i64>>>,
    pub p_matrix: Option<Vec<Vec<i64>>>,
    pub classes: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleReport {
    pub pair: PairInfo,
    pub kappa: Vec<String>,
    pub lambda_convention: String,
    pub index: usize,
    pub mu: i64,
    pub nu: Vec<String>,
    pub regime: String,
    pub reconstructibility: String,
    pub p_row: Vec<i64>,
    pub f1_character: KCharacterDoc,
    pub socle_character: KCharacterDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IwasawaRow {
    pub a: i64,
    pub b_values: Vec<String>,
    pub k_multiplicity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IwasawaReport {
    pub c: String,
    pub rows: Vec<IwasawaRow>,
}

pub fn prop52_name(r: Prop52Regime) -> &'static str {
    match r {
        Prop52Regime::Equality => "equality",
        Prop52Regime::UpperBound => "upper_bound",
        Prop52Regime::None => "none",
    }
}

pub fn socle_regime_name(r: SocleRegime) -> &'static str {
    match r {
        SocleRegime::Socle => "socle",
        SocleRegime::RGammaOfL => "r1_gamma_of_l",
    }
}

pub fn reconstructibility_name(r: ReconstructibilityRegime) -> &'static str {
    match r {
        ReconstructibilityRegime::Strong => "strong",
        ReconstructibilityRegime::SocleSimple => "socle_simple",
        ReconstructibilityRegime::WeakOnly => "weak_only",
    }
}
