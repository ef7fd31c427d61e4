//! Subgroup-lattice, quotient and core invariants over the catalog.

mod common;

use common::catalog_upto;
use permutizer::structure::*;
use permutizer::verify::oracle;
use permutizer::Subgroup;

#[test]
fn index_times_order_is_group_order() {
    for (name, g) in catalog_upto(360) {
        for h in all_subgroups(&g).unwrap().nodes() {
            assert_eq!(index(&g, &h).unwrap() * h.order(), g.order(), "{name}");
        }
    }
}

#[test]
fn lattice_matches_naive_closure() {
    for (name, g) in catalog_upto(60) {
        let elements = g.element_set().into_vec();
        let naive = oracle::lattice(g.ambient().degree(), &elements);
        let fast = all_subgroups(&g).unwrap();
        assert_eq!(fast.len(), naive.len(), "{name}");
        let mut fast_sets: Vec<_> = fast
            .nodes()
            .iter()
            .map(|h| {
                h.element_set()
                    .into_vec()
                    .into_iter()
                    .collect::<oracle::PermSet>()
            })
            .collect();
        fast_sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(fast_sets, naive, "{name}");
    }
}

#[test]
fn quotients_are_homomorphic_images() {
    for (name, g) in catalog_upto(360) {
        let ambient = g.ambient();
        for n in normal_subgroups(&g).unwrap() {
            let q = quotient(&g, &n).unwrap();
            assert_eq!(q.image().order() as usize * n.order(), g.order(), "{name}");
            assert!(q.is_homomorphism_on_generators(), "{name}");
            let gens = g.generator_ids().to_vec();
            for &a in &gens {
                for &b in &gens {
                    let lhs = permutizer::compose(&q.project(a).unwrap(), &q.project(b).unwrap())
                        .unwrap();
                    assert_eq!(lhs, q.project(ambient.mul(a, b)).unwrap(), "{name}");
                }
            }
            for x in n.ids() {
                assert!(q.project(x).unwrap().is_identity(), "{name}");
            }
        }
    }
}

#[test]
fn p_core_is_the_largest_normal_p_subgroup() {
    for (name, g) in catalog_upto(1000) {
        let normal = normal_subgroups(&g).unwrap();
        for p in prime_set(&g).iter() {
            let core = p_core(&g, p).unwrap();
            assert!(is_normal(&g, &core).unwrap(), "{name}");
            assert!(is_p_group(&core, p), "{name}");
            for n in normal.iter().filter(|n| is_p_group(n, p)) {
                assert!(n.is_subgroup_of(&core), "{name}: p = {p}");
            }
        }
    }
}

#[test]
fn overgroups_are_the_lattice_filter() {
    for (name, g) in catalog_upto(360) {
        let lattice = all_subgroups(&g).unwrap();
        let nodes = lattice.nodes();
        for h in &nodes {
            let expected: Vec<Subgroup> = nodes
                .iter()
                .filter(|u| h.is_subgroup_of(u))
                .cloned()
                .collect();
            assert_eq!(overgroups(&g, h).unwrap(), expected, "{name}");
        }
    }
}

#[test]
fn joins_and_meets_are_lattice_nodes() {
    for (name, g) in catalog_upto(120) {
        let lattice = all_subgroups(&g).unwrap();
        let nodes = lattice.nodes();
        let step = (nodes.len() / 12).max(1);
        for h in nodes.iter().step_by(step) {
            for k in nodes.iter().step_by(step) {
                let meet = intersect(h, k).unwrap();
                let join = join(h, k).unwrap();
                assert!(lattice.position(&meet).is_some(), "{name}");
                assert!(lattice.position(&join).is_some(), "{name}");
                assert!(meet.is_subgroup_of(h) && meet.is_subgroup_of(k), "{name}");
                assert!(h.is_subgroup_of(&join) && k.is_subgroup_of(&join), "{name}");
                for u in lattice.containing(h) {
                    if k.is_subgroup_of(&u) {
                        assert!(join.is_subgroup_of(&u), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn normal_subgroups_and_cores() {
    for (name, g) in catalog_upto(360) {
        let normal = normal_subgroups(&g).unwrap();
        for h in all_subgroups(&g).unwrap().nodes() {
            let invariant = g.generator_ids().iter().all(|&x| conjugate(&h, x) == h);
            assert_eq!(invariant, normal.contains(&h), "{name}");
            let core = core(&g, &h).unwrap();
            let mut meet = h.clone();
            for x in g.ids() {
                meet = intersect(&meet, &conjugate(&h, x)).unwrap();
            }
            assert_eq!(core, meet, "{name}");
            let largest = normal
                .iter()
                .filter(|n| n.is_subgroup_of(&h))
                .max_by_key(|n| n.order())
                .unwrap();
            assert_eq!(&core, largest, "{name}");
        }
    }
}

#[test]
fn sylow_and_hall_orders() {
    for (name, g) in catalog_upto(1000) {
        let order = g.order() as u64;
        for p in prime_set(&g).iter() {
            let s = sylow_subgroup(&g, p).unwrap();
            assert_eq!(s.order() as u64, primes::p_part(order, p), "{name}");
        }
        if g.order() <= 360 {
            for pi in prime_set(&g).subsets() {
                let part: u64 = pi.iter().map(|p| primes::p_part(order, p)).product();
                for h in hall_subgroups(&g, &pi).unwrap() {
                    assert_eq!(h.order() as u64, part, "{name}");
                }
            }
        }
    }
}

#[test]
fn concurrent_calls_match_sequential_ones() {
    use permutizer::chains::p_subnormal_subgroup_sweep;
    let g = common::whole("S5");
    let results: Vec<(Vec<Subgroup>, Vec<bool>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let g = g.clone();
                s.spawn(move || {
                    let nodes = all_subgroups(&g).unwrap().nodes();
                    (
                        nodes,
                        p_subnormal_subgroup_sweep(&g).unwrap().verdicts().to_vec(),
                    )
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let fresh = common::whole("S5");
    let expected = (
        all_subgroups(&fresh).unwrap().nodes(),
        p_subnormal_subgroup_sweep(&fresh)
            .unwrap()
            .verdicts()
            .to_vec(),
    );
    let fingerprints = |v: &[Subgroup]| v.iter().map(Subgroup::fingerprint).collect::<Vec<_>>();
    for (nodes, verdicts) in &results {
        assert_eq!(fingerprints(nodes), fingerprints(&expected.0));
        assert_eq!(verdicts, &expected.1);
    }
}
