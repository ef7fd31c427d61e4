//! Isomorphism of small groups by backtracking over generator images.

use crate::ambient::ElementId;
use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

/// Largest order the backtracking test accepts.
pub const ISOMORPHISM_ORDER_BOUND: usize = 64;

/// Extends `images` (of the first `images.len()` generators of `a`) to the
/// subgroup they generate. Returns false on any inconsistency.
fn consistent(a: &Subgroup, b: &Subgroup, gens: &[ElementId], images: &[ElementId]) -> bool {
    let (amb_a, amb_b) = (a.ambient(), b.ambient());
    let mut map = vec![u32::MAX; amb_a.order()];
    let mut used = amb_b.empty_set();
    map[amb_a.identity() as usize] = amb_b.identity();
    used.insert(amb_b.identity() as usize);
    let mut queue = vec![amb_a.identity()];
    let mut i = 0;
    while i < queue.len() {
        let u = queue[i];
        let fu = map[u as usize];
        for (k, &s) in gens.iter().enumerate().take(images.len()) {
            let v = amb_a.mul(u, s);
            let w = amb_b.mul(fu, images[k]);
            let slot = &mut map[v as usize];
            if *slot == u32::MAX {
                if used.contains(w as usize) {
                    return false;
                }
                *slot = w;
                used.insert(w as usize);
                queue.push(v);
            } else if *slot != w {
                return false;
            }
        }
        i += 1;
    }
    true
}

fn search(
    a: &Subgroup,
    b: &Subgroup,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    images: &mut Vec<ElementId>,
) -> bool {
    if images.len() == gens.len() {
        return true;
    }
    for &c in &candidates[images.len()] {
        images.push(c);
        if consistent(a, b, gens, images) && search(a, b, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Whether `a ≅ b`. Both groups must have order at most
/// [`ISOMORPHISM_ORDER_BOUND`].
pub fn are_isomorphic(a: &Subgroup, b: &Subgroup) -> Result<bool> {
    for g in [a, b] {
        if g.order() > ISOMORPHISM_ORDER_BOUND {
            return Err(Error::Resource {
                budget: "isomorphism order bound",
                limit: ISOMORPHISM_ORDER_BOUND,
                needed: g.order(),
            });
        }
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    let order_profile = |g: &Subgroup| {
        let mut v: Vec<u32> = g.ids().map(|x| g.ambient().element_order(x)).collect();
        v.sort_unstable();
        v
    };
    if order_profile(a) != order_profile(b) {
        return Ok(false);
    }
    let gens = a.generator_ids().to_vec();
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&s| {
            let ord = a.ambient().element_order(s);
            b.ids()
                .filter(|&y| b.ambient().element_order(y) == ord)
                .collect()
        })
        .collect();
    // A homomorphism injective on the generated group with |A| = |B| is onto.
    Ok(search(a, b, &gens, &candidates, &mut Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::Ambient;
    use crate::catalog;

    fn whole(name: &str) -> Subgroup {
        Subgroup::whole(&Ambient::new(catalog::by_name(name).unwrap()).unwrap())
    }

    #[test]
    fn small_isomorphisms() {
        assert!(are_isomorphic(&whole("S3"), &whole("D3")).unwrap());
        assert!(!are_isomorphic(&whole("C6"), &whole("S3")).unwrap());
        assert!(!are_isomorphic(&whole("S4"), &whole("SL(2,3)")).unwrap());
        assert!(are_isomorphic(&whole("S4"), &whole("S4")).unwrap());
        assert!(!are_isomorphic(&whole("D4"), &whole("C8")).unwrap());
    }

    #[test]
    fn order_bound() {
        assert!(are_isomorphic(&whole("S5"), &whole("S5"))
            .unwrap_err()
            .is_resource());
    }
}
