use ghcseries::blocks::socle_k_character;
use ghcseries::fixtures::Fixture;
use ghcseries::parabolic::genericity_check;
use ghcseries::{
    bounds_report, build_root_system, enumerate_block, euler_k_character, f1_k_character,
    invariants, iwasawa_sl3_support, minimal_parabolic, multiplicity_matrix, parse_type_label,
    prop52_regime, reconstructibility_report, sl2_decomposition, t_character_n, t_character_of_g,
    CentralCharacter, CompatibleParabolic, Error, LambdaConvention, ModuleDatum, Rational, Result,
    Sl2Embedding, Weight,
};

use crate::report::*;

/// Which `(g, k)` pair to work with.
#[derive(Clone, Debug)]
pub enum PairSpec {
    Fixture(String),
    Explicit { algebra: String, embedding: String },
}

pub struct Pair {
    pub info: PairInfo,
    pub parabolic: CompatibleParabolic,
}

impl PairSpec {
    pub fn resolve(&self) -> Result<Pair> {
        let (fixture, algebra, embedding_text, e) = match self {
            PairSpec::Fixture(name) => {
                let f = Fixture::by_name(name).ok_or_else(|| {
                    let names: Vec<_> = Fixture::ALL.iter().map(|f| f.name()).collect();
                    Error::InvalidInput(format!(
                        "unknown fixture '{name}', expected one of {}",
                        names.join(", ")
                    ))
                })?;
                let e = f.embedding()?;
                let text = e.kind().to_string();
                (Some(f.name().to_string()), f.algebra().to_string(), text, e)
            }
            PairSpec::Explicit { algebra, embedding } => {
                let rs = build_root_system(&parse_type_label(algebra)?)?;
                let e = parse_embedding(&rs, embedding)?;
                (None, algebra.clone(), embedding.clone(), e)
            }
        };
        let info = PairInfo {
            fixture,
            algebra,
            embedding: embedding_text,
            h: weight(e.h()),
            h_coroot_coefficients: e.coroot_coefficients().iter().map(q).collect(),
            regular: e.is_regular(),
        };
        Ok(Pair {
            info,
            parabolic: minimal_parabolic(&e),
        })
    }
}

/// `principal`, `root:<coords>` or `vector:<coords>`.
fn parse_embedding(rs: &ghcseries::RootSystem, s: &str) -> Result<Sl2Embedding> {
    let s = s.trim();
    if s == "principal" {
        return Sl2Embedding::from_principal(rs);
    }
    match s.split_once(':') {
        Some(("root", c)) => Sl2Embedding::from_root(rs, &Weight::parse(c)?),
        Some(("vector", c)) => Sl2Embedding::from_defining_vector(rs, &Weight::parse(c)?),
        _ => Err(Error::InvalidInput(format!(
            "cannot parse embedding '{s}': expected principal, root:<coords> or vector:<coords>"
        ))),
    }
}

fn lambda_name(c: LambdaConvention) -> String {
    c.to_string()
}

pub fn analyze(spec: &PairSpec, mu: Option<i64>, conv: LambdaConvention) -> Result<Document> {
    let pair = spec.resolve()?;
    let p = &pair.parabolic;
    let inv = invariants(p);
    let dec = sl2_decomposition(&t_character_of_g(p.embedding()))?;
    let b = bounds_report(p);
    let invariants = Invariants {
        rho_n: q(&inv.rho_n),
        rho: inv.rho,
        two_rho_n_perp: inv.two_rho_n_perp,
        rho_tilde_n: weight(&inv.rho_tilde_n),
        r: inv.r,
        s: inv.s,
        n_weights: p.n_weights().to_vec(),
        perp_weights: p.perp_weights(),
        m_is_cartan: p.m_is_cartan(),
        lambdas_n: inv.n.into(),
        lambdas_perp: inv.perp.into(),
    };
    let bounds = Bounds {
        weak: b.weak.into(),
        generic: b.generic.into(),
        n: b.n.into(),
        perp: b.perp.into(),
        prior_work: b.prior_work.map(|pw| PriorWorkDoc {
            r: pw.r.iter().map(q).collect(),
            threshold: pw.threshold.into(),
        }),
    };
    let mu = match mu {
        None => None,
        Some(mu) => {
            let g = genericity_check(p, mu)?;
            let rec = reconstructibility_report(p, mu, conv)?;
            Some(MuAnalysis {
                mu,
                omega: mu - p.two_rho_n_perp(),
                generic: g.generic,
                genericity_witness: g.witness.as_ref().map(WitnessDoc::from),
                top_cohomology: prop52_name(prop52_regime(p, mu, conv)).to_string(),
                socle_simple: rec.socle_simple,
                strong_bijection: rec.strong_bijection,
                reconstructibility: reconstructibility_name(rec.regime).to_string(),
            })
        }
    };
    Ok(Document::Analyze(AnalyzeReport {
        pair: pair.info,
        lambda_convention: lambda_name(conv),
        g_decomposition: dec.iter().rev().collect(),
        g_decomposition_text: dec.to_string(),
        invariants,
        bounds,
        mu,
    }))
}

pub fn character(
    spec: &PairSpec,
    mu: i64,
    dim_e: i64,
    cutoff: i64,
    allow_virtual: bool,
) -> Result<Document> {
    check_cutoff(cutoff)?;
    if mu < 0 && !allow_virtual {
        return Err(Error::InvalidInput(format!(
            "minimal k-type {mu} is negative; pass --allow-virtual for the Euler characteristic"
        )));
    }
    let pair = spec.resolve()?;
    let p = &pair.parabolic;
    let e = ModuleDatum::from_mu(p, mu, dim_e)?;
    let n = t_character_n(p, &e, cutoff + 2)?;
    let k = if mu >= 0 {
        f1_k_character(p, &e, cutoff)?
    } else {
        euler_k_character(&n, cutoff)?.negate()
    };
    Ok(Document::Character(CharacterReport {
        pair: pair.info,
        mu,
        omega: e.omega,
        dim_e,
        n_character: (&n).into(),
        k_character: (&k).into(),
    }))
}

fn check_cutoff(cutoff: i64) -> Result<()> {
    if !(0..=10_000).contains(&cutoff) {
        return Err(Error::InvalidInput(format!(
            "cutoff must lie in 0..=10000, got {cutoff}"
        )));
    }
    Ok(())
}

fn central(pair: &Pair, kappa: &str) -> Result<(Weight, CentralCharacter)> {
    let kappa = Weight::parse(kappa)?;
    let theta = CentralCharacter::from_kappa(&kappa, pair.parabolic.borel())?;
    Ok((kappa, theta))
}

pub fn block(spec: &PairSpec, kappa: &str, enumerate_only: bool) -> Result<Document> {
    let pair = spec.resolve()?;
    let p = &pair.parabolic;
    let (kappa, theta) = central(&pair, kappa)?;
    let (elements, matrices) = if enumerate_only {
        (enumerate_block(&theta, p)?, None)
    } else {
        let mm = multiplicity_matrix(&theta, p)?;
        let m = (
            mm.m_matrix().to_vec(),
            mm.p_matrix().to_vec(),
            mm.classes().to_vec(),
        );
        (mm.elements().to_vec(), Some(m))
    };
    let rows: Vec<BlockRow> = elements
        .iter()
        .enumerate()
        .map(|(i, el)| BlockRow {
            index: i,
            w: WeylDoc {
                length: el.w.length(),
                matrix: el
                    .w
                    .matrix()
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(q).collect())
                    .collect(),
            },
            nu: weight(&el.nu),
            omega: el.omega,
            mu: el.mu,
            m_dominant: el.m_dominant,
            dim_e: el.dim_e,
            orbit_count: el.orbit_count,
        })
        .collect();
    let mut mu_multiset: Vec<i64> = rows.iter().map(|r| r.mu).collect();
    mu_multiset.sort_unstable_by(|a, b| b.cmp(a));
    let (m_matrix, p_matrix, classes) = match matrices {
        Some((m, pm, c)) => (Some(m), Some(pm), Some(c)),
        None => (None, None, None),
    };
    Ok(Document::Block(BlockReport {
        pair: pair.info,
        kappa: weight(&kappa),
        central_character: weight(theta.representative()),
        regular: theta.is_regular(),
        integral: theta.is_integral(),
        elements: rows,
        mu_multiset,
        m_matrix,
        p_matrix,
        classes,
    }))
}

pub fn socle(
    spec: &PairSpec,
    kappa: &str,
    mu: i64,
    index: Option<usize>,
    cutoff: i64,
    conv: LambdaConvention,
) -> Result<Document> {
    check_cutoff(cutoff)?;
    let pair = spec.resolve()?;
    let p = &pair.parabolic;
    let (kappa, theta) = central(&pair, kappa)?;
    let mm = multiplicity_matrix(&theta, p)?;
    let candidates = mm.indices_with_mu(mu);
    let index = match (index, candidates.as_slice()) {
        (_, []) => {
            return Err(Error::InvalidInput(format!(
                "no block element has minimal k-type {mu}"
            )))
        }
        (None, [i]) => *i,
        (None, many) => {
            return Err(Error::InvalidInput(format!(
                "several block elements have minimal k-type {mu} (indices {many:?}); pick one with --index"
            )))
        }
        (Some(i), c) if c.contains(&i) => i,
        (Some(i), c) => {
            return Err(Error::InvalidInput(format!(
                "element {i} does not have minimal k-type {mu}; candidates are {c:?}"
            )))
        }
    };
    let s = socle_k_character(p, &mm, index, cutoff, conv)?;
    let el = &mm.elements()[index];
    let f1 = f1_k_character(p, &el.datum(), cutoff)?;
    let rec = reconstructibility_report(p, mu, conv)?;
    Ok(Document::Socle(SocleReport {
        pair: pair.info,
        kappa: weight(&kappa),
        lambda_convention: lambda_name(conv),
        index,
        mu,
        nu: weight(&el.nu),
        regime: socle_regime_name(s.regime).to_string(),
        reconstructibility: reconstructibility_name(rec.regime).to_string(),
        p_row: mm.p_matrix()[index].clone(),
        f1_character: (&f1).into(),
        socle_character: (&s.character).into(),
    }))
}

pub fn iwasawa(max_a: i64, c: Rational) -> Result<Document> {
    if !(0..=10_000).contains(&max_a) {
        return Err(Error::InvalidInput(format!(
            "max a must lie in 0..=10000, got {max_a}"
        )));
    }
    let rows = (0..=max_a)
        .map(|a| {
            iwasawa_sl3_support(a, c).map(|s| IwasawaRow {
                a: s.a,
                b_values: s.b_values.iter().map(q).collect(),
                k_multiplicity: s.k_multiplicity,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Document::Iwasawa(IwasawaReport { c: q(&c), rows }))
}
