//! Definition-literal reference implementations over plain sets of
//! permutations. Slow and simple; used to cross-check the fast algorithms
//! on small groups.

use std::collections::{BTreeSet, HashSet};

use crate::perm::Permutation;
use crate::structure::primes::is_prime;

pub type PermSet = BTreeSet<Permutation>;

/// The subgroup generated by `gens`, by closing under multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> PermSet {
    let mut set = PermSet::new();
    let id = Permutation::identity(degree);
    set.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(a) = frontier.pop() {
        for g in gens {
            let b = a.compose(g).expect("same degree");
            if set.insert(b.clone()) {
                frontier.push(b);
            }
        }
    }
    set
}

/// All subgroups of `elements`: the cyclic subgroups, closed under pairwise
/// joins until nothing new appears. Sorted by order, then elements.
pub fn lattice(degree: usize, elements: &[Permutation]) -> Vec<PermSet> {
    let mut found: BTreeSet<PermSet> = elements
        .iter()
        .map(|x| closure(degree, std::slice::from_ref(x)))
        .collect();
    loop {
        let current: Vec<PermSet> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let gens: Vec<Permutation> = a.iter().chain(b.iter()).cloned().collect();
                if found.insert(closure(degree, &gens)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<PermSet> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn product(a: &PermSet, b: &PermSet) -> HashSet<Permutation> {
    let mut out = HashSet::new();
    for x in a {
        for y in b {
            out.insert(x.compose(y).expect("same degree"));
        }
    }
    out
}

/// `AB = BA`.
pub fn permutes(a: &PermSet, b: &PermSet) -> bool {
    product(a, b) == product(b, a)
}

/// `P_U(H)`: the closure of every `x ∈ U` with `⟨x⟩H = H⟨x⟩`.
pub fn permutizer(degree: usize, u: &PermSet, h: &PermSet) -> PermSet {
    let gens: Vec<Permutation> = u
        .iter()
        .filter(|x| permutes(&closure(degree, std::slice::from_ref(*x)), h))
        .cloned()
        .collect();
    closure(degree, &gens)
}

/// `P_U(H) = U` for every lattice member `U ⊇ H`.
pub fn strongly_permutable(degree: usize, lattice: &[PermSet], h: &PermSet) -> bool {
    lattice
        .iter()
        .filter(|u| h.is_subset(u))
        .all(|u| permutizer(degree, u, h) == *u)
}

/// Depth-first search for a chain of prime indices from `H` to `G` through
/// lattice members.
pub fn p_subnormal(lattice: &[PermSet], g: &PermSet, h: &PermSet) -> bool {
    fn go(lattice: &[PermSet], g: &PermSet, k: &PermSet, dead: &mut HashSet<PermSet>) -> bool {
        if k.len() == g.len() {
            return true;
        }
        if dead.contains(k) {
            return false;
        }
        for m in lattice {
            if m.len() > k.len()
                && m.len() % k.len() == 0
                && is_prime((m.len() / k.len()) as u64)
                && k.is_subset(m)
                && go(lattice, g, m, dead)
            {
                return true;
            }
        }
        dead.insert(k.clone());
        false
    }
    go(lattice, g, h, &mut HashSet::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn small_lattices() {
        for (name, count) in [("S3", 6), ("A4", 10), ("S4", 30), ("D4", 10), ("C12", 6)] {
            let g = catalog::by_name(name).unwrap();
            let els = g.elements().unwrap().into_vec();
            assert_eq!(lattice(g.degree(), &els).len(), count, "{name}");
        }
    }

    #[test]
    fn a4_involution() {
        let g = catalog::by_name("A4").unwrap();
        let els = g.elements().unwrap().into_vec();
        let lat = lattice(4, &els);
        let whole: PermSet = els.iter().cloned().collect();
        let c2 = closure(4, &[catalog::parse_permutation(4, "(1 2)(3 4)").unwrap()]);
        let c3 = closure(4, &[catalog::parse_permutation(4, "(1 2 3)").unwrap()]);
        assert!(p_subnormal(&lat, &whole, &c2));
        assert!(!p_subnormal(&lat, &whole, &c3));
        assert_eq!(permutizer(4, &whole, &c2).len(), 4);
        assert!(!strongly_permutable(4, &lat, &c2));
    }
}
