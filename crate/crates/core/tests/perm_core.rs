//! Permutation and group-construction invariants over the catalog.

mod common;

use permutizer::perm::Permutation;
use permutizer::{catalog, compose, element_order, group_from_generators};
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::{Config, TestRunner};

#[test]
fn random_pairs_invert_and_respect_lagrange() {
    for name in catalog::names() {
        let g = catalog::by_name(&name).unwrap();
        let elements = g.elements().unwrap().into_vec();
        let mut runner = TestRunner::new(Config::with_cases(100));
        runner
            .run(&(any::<Index>(), any::<Index>()), |(i, j)| {
                let a = i.get(&elements);
                let b = j.get(&elements);
                prop_assert!(compose(a, &a.inverse()).unwrap().is_identity());
                let ab = compose(a, b).unwrap();
                prop_assert!(g.contains(&ab));
                prop_assert_eq!(g.order() % element_order(&ab), 0);
                Ok(())
            })
            .unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn regenerating_from_all_elements_keeps_the_order() {
    for name in catalog::names() {
        let g = catalog::by_name(&name).unwrap();
        if g.order() > 1000 {
            continue;
        }
        let elements = g.elements().unwrap().into_vec();
        assert_eq!(
            group_from_generators(elements).unwrap().order(),
            g.order(),
            "{name}"
        );
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if rest.is_empty() {
            out.push(Permutation::from_images(prefix).unwrap());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            extend(prefix, rest, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

#[test]
fn membership_agrees_with_enumeration() {
    for name in catalog::names() {
        let g = catalog::by_name(&name).unwrap();
        if g.order() > 1000 {
            continue;
        }
        let elements = g.elements().unwrap();
        let n = g.degree();
        if n <= 7 {
            for x in all_permutations(n) {
                assert_eq!(g.contains(&x), elements.contains(&x), "{name}: {x:?}");
            }
        } else {
            let transposition = Permutation::from_cycles(n, &[[1, 2]]).unwrap();
            let long_cycle = Permutation::from_cycles(n, &[(1..=n).collect::<Vec<_>>()]).unwrap();
            for x in elements.iter() {
                assert!(g.contains(x), "{name}: {x:?}");
                for s in [&transposition, &long_cycle] {
                    let y = compose(x, s).unwrap();
                    assert_eq!(g.contains(&y), elements.contains(&y), "{name}: {y:?}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn composition_is_associative_and_inverse_is_involutive(
        a in Just(8usize).prop_flat_map(|n| proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), n).prop_shuffle()),
        b in Just(8usize).prop_flat_map(|n| proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), n).prop_shuffle()),
    ) {
        let a = Permutation::from_images(&a).unwrap();
        let b = Permutation::from_images(&b).unwrap();
        let ab = compose(&a, &b).unwrap();
        prop_assert_eq!(ab.inverse(), compose(&b.inverse(), &a.inverse()).unwrap());
        prop_assert_eq!(a.inverse().inverse(), a.clone());
        prop_assert_eq!(element_order(&a.conjugate_by(&b)), element_order(&a));
        prop_assert!(a.pow(element_order(&a) as i64).is_identity());
    }
}

#[test]
fn values_are_shareable_between_threads() {
    fn shareable<T: Send + Sync>() {}
    shareable::<Permutation>();
    shareable::<permutizer::PermGroup>();
    shareable::<permutizer::Ambient>();
    shareable::<permutizer::Subgroup>();
    shareable::<permutizer::SubgroupLattice>();
    shareable::<permutizer::SubnormalChain>();
    shareable::<permutizer::Error>();
}
