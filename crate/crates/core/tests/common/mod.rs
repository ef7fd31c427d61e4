#![allow(dead_code)]

use permutizer::{catalog, Ambient, Subgroup};

/// Catalog groups of order at most `max`, as whole subgroups, in catalog order.
pub fn catalog_upto(max: u64) -> Vec<(String, Subgroup)> {
    catalog::names()
        .into_iter()
        .filter_map(|name| {
            let g = catalog::by_name(&name).unwrap();
            (g.order() <= max).then(|| (name, Subgroup::whole(&Ambient::new(g).unwrap())))
        })
        .collect()
}

pub fn whole(name: &str) -> Subgroup {
    Subgroup::whole(&Ambient::new(catalog::by_name(name).unwrap()).unwrap())
}
