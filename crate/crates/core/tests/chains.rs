//! Prime-index chain invariants over the catalog.

mod common;

use common::catalog_upto;
use permutizer::chains::*;
use permutizer::classify::is_soluble;
use permutizer::structure::*;
use permutizer::verify::oracle;

#[test]
fn search_agrees_with_oracle() {
    for (name, g) in catalog_upto(100) {
        let lattice = all_subgroups(&g).unwrap();
        let sets: Vec<oracle::PermSet> = lattice
            .nodes()
            .iter()
            .map(|h| h.element_set().into_vec().into_iter().collect())
            .collect();
        let top = sets.last().unwrap().clone();
        let sweep = p_subnormal_subgroup_sweep(&g).unwrap();
        for (i, h) in lattice.nodes().iter().enumerate() {
            let expected = oracle::p_subnormal(&sets, &top, &sets[i]);
            let chain = is_p_subnormal(&g, h).unwrap();
            assert_eq!(chain.is_some(), expected, "{name}");
            assert_eq!(sweep.verdict(h), Some(expected), "{name}");
            if let Some(chain) = chain {
                assert_eq!(validate_chain(&chain), Ok(()), "{name}");
                assert!(chain.connects(h, &g), "{name}");
            }
        }
    }
}

#[test]
fn p_subnormality_passes_to_quotients_and_normal_sections() {
    for (name, g) in catalog_upto(100) {
        let sweep = p_subnormal_subgroup_sweep(&g).unwrap();
        for n in normal_subgroups(&g).unwrap() {
            let q = quotient(&g, &n).unwrap();
            let image_sweep = p_subnormal_subgroup_sweep(&q.image_whole()).unwrap();
            let section_sweep = p_subnormal_subgroup_sweep(&n).unwrap();
            for (h, psn) in sweep.iter() {
                if !psn {
                    continue;
                }
                let image = q.project_subgroup(&h).unwrap();
                assert_eq!(image_sweep.verdict(&image), Some(true), "{name}");
                let meet = intersect(&h, &n).unwrap();
                assert_eq!(section_sweep.verdict(&meet), Some(true), "{name}");
            }
        }
    }
}

#[test]
fn p_subnormality_is_transitive() {
    for (name, g) in catalog_upto(100) {
        let sweep = p_subnormal_subgroup_sweep(&g).unwrap();
        for (l, psn) in sweep.iter() {
            if !psn || l.is_whole() {
                continue;
            }
            for (h, inner) in p_subnormal_subgroup_sweep(&l).unwrap().iter() {
                if inner {
                    assert_eq!(sweep.verdict(&h), Some(true), "{name}");
                }
            }
        }
    }
}

#[test]
fn soluble_intersections_stay_p_subnormal() {
    for (name, g) in catalog_upto(100) {
        if !is_soluble(&g) {
            continue;
        }
        let sweep = p_subnormal_subgroup_sweep(&g).unwrap();
        for u in sweep.lattice().nodes() {
            let inner = p_subnormal_subgroup_sweep(&u).unwrap();
            for (h, psn) in sweep.iter() {
                if psn {
                    let meet = intersect(&h, &u).unwrap();
                    assert_eq!(inner.verdict(&meet), Some(true), "{name}");
                }
            }
        }
    }
}

#[test]
fn r_core_of_p_subnormal_subgroups() {
    for (name, g) in catalog_upto(360) {
        let r = prime_set(&g).largest().unwrap_or(1);
        if r == 1 {
            continue;
        }
        let top = p_core(&g, r).unwrap();
        for (h, psn) in p_subnormal_subgroup_sweep(&g).unwrap().iter() {
            if psn {
                assert!(p_core(&h, r).unwrap().is_subgroup_of(&top), "{name}");
            }
        }
    }
}

#[test]
fn sweep_chains_are_valid() {
    for (name, g) in catalog_upto(360) {
        let sweep = p_subnormal_subgroup_sweep(&g).unwrap();
        for (h, psn) in sweep.iter() {
            match sweep.chain(&h) {
                Some(chain) => {
                    assert!(psn, "{name}");
                    assert_eq!(validate_chain(&chain), Ok(()), "{name}");
                    assert!(chain.connects(&h, &g), "{name}");
                }
                None => assert!(!psn, "{name}"),
            }
        }
    }
}
