mod common;

use common::{rs, RANK2_TYPES};
use ghcseries::linalg::int_matmul;
use ghcseries::{
    f1_k_character, minimal_parabolic, multiplicity_matrix, socle_k_character, weyl_group,
    enumerate_block, CentralCharacter, CompatibleParabolic, LambdaConvention, Rational, Sl2Embedding, Weight,
};
use proptest::prelude::*;

const CUTOFF: i64 = 36;

/// Genuine `sl(2)`-subalgebras of rank-two algebras with `m = h`:
/// principal ones and regular root subalgebras.
fn regular_parabolics() -> Vec<CompatibleParabolic> {
    let mut out = Vec::new();
    for label in RANK2_TYPES {
        let r = rs(label);
        out.push(Sl2Embedding::from_principal(&r).unwrap());
        for beta in r.positive_roots() {
            out.push(Sl2Embedding::from_root(&r, beta).unwrap());
        }
    }
    out.iter()
        .map(minimal_parabolic)
        .filter(CompatibleParabolic::m_is_cartan)
        .collect()
}

fn regular_setup() -> impl Strategy<Value = (CompatibleParabolic, CentralCharacter)> {
    let ps = regular_parabolics();
    (
        0..ps.len(),
        prop::collection::vec(-9i64..=9, 4),
        1i64..=3,
    )
        .prop_filter_map("needs a regular kappa", move |(idx, ks, d)| {
            let p = ps[idx].clone();
            let n = p.borel().ambient_dim();
            let kappa = Weight::new(ks.into_iter().cycle().take(n).map(|v| Rational::new(v, d)).collect());
            let k = CentralCharacter::from_kappa(&kappa, p.borel()).ok()?;
            k.is_regular().then_some((p, k))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplicity_algebra((p, k) in regular_setup()) {
        let mm = multiplicity_matrix(&k, &p).unwrap();
        let n = mm.len();
        let els = mm.elements();
        let w = weyl_group(p.borel()).unwrap();
        let count: usize = els.iter().map(|e| e.orbit_count).sum();
        prop_assert!(count <= w.order());
        if k.is_integral() {
            prop_assert_eq!(count, w.order());
        }
        for e in els {
            prop_assert_eq!(e.mu - e.omega, p.two_rho_n_perp());
        }
        let m = mm.m_matrix();
        let pm = mm.p_matrix();
        for i in 0..n {
            prop_assert_eq!(m[i][i], 1);
            for j in 0..n {
                prop_assert!(m[i][j] == 0 || m[i][j] == 1);
                prop_assert!((-1..=1).contains(&pm[i][j]));
                if i != j && m[i][j] != 0 {
                    prop_assert!(els[j].mu > els[i].mu);
                }
            }
        }
        let id1 = int_matmul(m, pm);
        let id2 = int_matmul(pm, m);
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(id1[i][j], i64::from(i == j));
                prop_assert_eq!(id2[i][j], i64::from(i == j));
            }
        }
    }

    #[test]
    fn socle_characters((p, k) in regular_setup()) {
        let mm = multiplicity_matrix(&k, &p).unwrap();
        let els = mm.elements();
        let n = mm.len();
        let conv = LambdaConvention::N;
        let socles: Vec<Option<Vec<i64>>> = (0..n)
            .map(|i| {
                (els[i].mu >= 0).then(|| {
                    socle_k_character(&p, &mm, i, CUTOFF, conv).unwrap().character.to_vec()
                })
            })
            .collect();
        for i in 0..n {
            let Some(s) = &socles[i] else { continue };
            let f1 = f1_k_character(&p, &els[i].datum(), CUTOFF).unwrap().to_vec();
            let mu = els[i].mu;
            if mu <= CUTOFF {
                prop_assert_eq!(s[mu as usize], f1[mu as usize]);
                prop_assert_eq!(s[mu as usize], els[i].dim_e);
            }
            for d in 0..=CUTOFF as usize {
                prop_assert!(s[d] >= 0 && s[d] <= f1[d]);
            }
            // [F^1(E)] = sum_D m(E, D) [socle(D)]
            let mut back = vec![0i64; CUTOFF as usize + 1];
            for j in 0..n {
                if mm.m_matrix()[i][j] != 0 {
                    let sj = socles[j].as_ref().expect("mu_D >= mu_E >= 0");
                    for d in 0..back.len() {
                        back[d] += mm.m_matrix()[i][j] * sj[d];
                    }
                }
            }
            prop_assert_eq!(&back, &f1);
            let irreducible = (0..n).all(|j| j == i || mm.m_matrix()[i][j] == 0);
            if irreducible {
                prop_assert_eq!(s, &f1);
            }
        }
    }

    #[test]
    fn enumeration_only_depends_on_orbit((p, k) in regular_setup()) {
        let a = enumerate_block(&k, &p).unwrap();
        let w = weyl_group(p.borel()).unwrap();
        let moved = w.elements().last().unwrap().act(k.representative());
        let k2 = CentralCharacter::from_kappa(&moved, p.borel()).unwrap();
        prop_assert_eq!(&k, &k2);
        let b = enumerate_block(&k2, &p).unwrap();
        prop_assert_eq!(
            a.iter().map(|e| (e.mu, e.nu.clone())).collect::<Vec<_>>(),
            b.iter().map(|e| (e.mu, e.nu.clone())).collect::<Vec<_>>()
        );
    }
}
