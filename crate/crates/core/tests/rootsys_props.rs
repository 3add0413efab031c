mod common;

use std::collections::HashMap;

use common::{q, rs, SMALL_TYPES};
use ghcseries::linalg::RatMatrix;
use ghcseries::rootsys::{pairing, reflection_matrix};
use ghcseries::{inner_product, weyl_group, Rational, Weight, WeylGroup};
use proptest::prelude::*;

/// A reduced word (indices into the simple roots) for every element,
/// found by breadth-first search on right multiplication.
fn reduced_words(w: &WeylGroup) -> HashMap<RatMatrix, Vec<usize>> {
    let gens: Vec<RatMatrix> = w.simple_roots().iter().map(reflection_matrix).collect();
    let id = w.identity().matrix().clone();
    let mut words = HashMap::from([(id.clone(), Vec::new())]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in frontier {
            for (i, g) in gens.iter().enumerate() {
                let mg = &m * g;
                if !words.contains_key(&mg) {
                    let mut word = words[&m].clone();
                    word.push(i);
                    words.insert(mg.clone(), word);
                    next.push(mg);
                }
            }
        }
        frontier = next;
    }
    words
}

/// `x <= y` iff `x` is the product of a subword of a reduced word of `y`.
fn subword_leq(w: &WeylGroup, words: &HashMap<RatMatrix, Vec<usize>>, x: &RatMatrix, y: &RatMatrix) -> bool {
    let gens: Vec<RatMatrix> = w.simple_roots().iter().map(reflection_matrix).collect();
    let word = &words[y];
    let n = w.identity().matrix().dim();
    (0u32..1 << word.len()).any(|mask| {
        let prod = word
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .fold(RatMatrix::identity(n), |acc, (_, &i)| &acc * &gens[i]);
        &prod == x
    })
}

#[test]
fn bruhat_matches_subword_oracle() {
    for label in SMALL_TYPES {
        let w = weyl_group(&rs(label)).unwrap();
        let words = reduced_words(&w);
        for (x, word) in &words {
            assert_eq!(word.len(), w.element(x).unwrap().length(), "{label}");
        }
        for x in w.elements() {
            for y in w.elements() {
                assert_eq!(
                    w.bruhat_leq(x, y).unwrap(),
                    subword_leq(&w, &words, x.matrix(), y.matrix()),
                    "{label}: {x:?} <= {y:?}"
                );
            }
        }
    }
}

#[test]
fn root_system_invariants() {
    for label in SMALL_TYPES.iter().chain(&["D4", "C3", "B4", "A4"]) {
        let r = rs(label);
        let sum = r
            .positive_roots()
            .iter()
            .fold(Weight::zero(r.ambient_dim()), |acc, a| &acc + a);
        assert_eq!(sum, r.rho_tilde().scale(q(2, 1)));
        for a in r.roots() {
            assert!(r.is_root(&-a));
            for b in r.roots() {
                assert!(pairing(b, a).is_integer());
            }
        }
        assert_eq!(r.positive_roots().len() * 2, r.roots().len());
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #[test]
    fn weyl_elements_are_isometries(
        idx in 0..SMALL_TYPES.len(),
        xs in prop::collection::vec(small_rational(), 4),
        ys in prop::collection::vec(small_rational(), 4),
    ) {
        let r = rs(SMALL_TYPES[idx]);
        let n = r.ambient_dim();
        let x = Weight::new(xs.into_iter().cycle().take(n).collect());
        let y = Weight::new(ys.into_iter().cycle().take(n).collect());
        let w = weyl_group(&r).unwrap();
        let base = inner_product(&x, &y).unwrap();
        for e in w.elements() {
            prop_assert_eq!(inner_product(&e.act(&x), &e.act(&y)).unwrap(), base);
        }
    }

    #[test]
    fn orbit_stabilizer(
        idx in 0..SMALL_TYPES.len(),
        xs in prop::collection::vec(-3i64..=3, 4),
        d in 1i64..=2,
    ) {
        let r = rs(SMALL_TYPES[idx]);
        let n = r.ambient_dim();
        let k = Weight::new(xs.into_iter().cycle().take(n).map(|v| Rational::new(v, d)).collect());
        let w = weyl_group(&r).unwrap();
        prop_assert_eq!(w.orbit(&k).len() * w.stabilizer_order(&k), w.order());
    }
}
