//! Subgroup-level machinery: normalizers, centralizers, Sylow and Hall
//! subgroups, cores, series, lattices and quotients.
//!
//! Every operation takes the group it works in as a [`Subgroup`] of some
//! ambient, so "G" may itself be a proper subgroup of a larger enumerated
//! group. Wrap a whole [`PermGroup`](crate::PermGroup) with
//! [`Subgroup::whole`] to work in it directly.

pub mod iso;
pub mod lattice;
pub mod primes;
pub mod quotient;

use fixedbitset::FixedBitSet;
use num_integer::Integer;

use crate::ambient::ElementId;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

pub use iso::are_isomorphic;
pub use lattice::{
    all_subgroups, frattini, hall_subgroups, maximal_subgroups, minimal_normal_subgroups,
    normal_subgroups, overgroups, SubgroupLattice,
};
pub use primes::PrimeSet;
pub use quotient::{quotient, QuotientRep};

/// `⟨h, k⟩`.
pub fn join(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.check_ambient(k)?;
    let (big, small) = if h.order() >= k.order() {
        (h, k)
    } else {
        (k, h)
    };
    let mut out = big.clone();
    for &x in small.generator_ids() {
        out = out.extended_by(x);
    }
    Ok(out)
}

pub fn intersect(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.check_ambient(k)?;
    let mut members = h.members().clone();
    members.intersect_with(k.members());
    Ok(Subgroup::from_members(h.ambient(), members))
}

/// Member set of `{a b : a ∈ left, b ∈ right}`.
pub(crate) fn product_members(
    h: &Subgroup,
    left: &[ElementId],
    right: &[ElementId],
) -> FixedBitSet {
    let amb = h.ambient();
    let mut out = amb.empty_set();
    for &a in left {
        for &b in right {
            out.insert(amb.mul(a, b) as usize);
        }
    }
    out
}

/// The literal set `HK = {hk}`.
pub fn set_product(h: &Subgroup, k: &Subgroup) -> Result<ElementSet> {
    h.check_ambient(k)?;
    let left: Vec<_> = h.ids().collect();
    let right: Vec<_> = k.ids().collect();
    let members = product_members(h, &left, &right);
    let amb = h.ambient();
    Ok(ElementSet::from_unsorted(
        members
            .ones()
            .map(|x| amb.element(x as ElementId).clone())
            .collect(),
    ))
}

/// Size of `HK` without materializing permutations.
pub fn set_product_size(h: &Subgroup, k: &Subgroup) -> Result<usize> {
    h.check_ambient(k)?;
    let left: Vec<_> = h.ids().collect();
    let right: Vec<_> = k.ids().collect();
    Ok(product_members(h, &left, &right).count_ones(..))
}

/// `H^x = x⁻¹ H x`.
pub fn conjugate(h: &Subgroup, x: ElementId) -> Subgroup {
    let amb = h.ambient();
    let mut members = amb.empty_set();
    for y in h.ids() {
        members.insert(amb.conj(y, x) as usize);
    }
    Subgroup::from_members(amb, members)
}

fn conjugate_members(h: &FixedBitSet, x: ElementId, g: &Subgroup) -> FixedBitSet {
    let amb = g.ambient();
    let mut members = amb.empty_set();
    for y in h.ones() {
        members.insert(amb.conj(y as ElementId, x) as usize);
    }
    members
}

/// `H ⊴ G`. Errors unless `H ≤ G`.
pub fn is_normal(g: &Subgroup, h: &Subgroup) -> Result<bool> {
    h.check_inside(g)?;
    let amb = g.ambient();
    Ok(g.generator_ids().iter().all(|&s| {
        h.generator_ids()
            .iter()
            .all(|&t| h.contains_id(amb.conj(t, s)))
    }))
}

/// `|G : H|`.
pub fn index(g: &Subgroup, h: &Subgroup) -> Result<usize> {
    h.check_inside(g)?;
    Ok(g.order() / h.order())
}

/// `π(G)`.
pub fn prime_set(g: &Subgroup) -> PrimeSet {
    PrimeSet::of(g.order() as u64)
}

/// Least common multiple of the element orders.
pub fn exponent(g: &Subgroup) -> u64 {
    let amb = g.ambient();
    g.ids()
        .fold(1u64, |acc, x| acc.lcm(&(amb.element_order(x) as u64)))
}

/// `N_G(H) = {g ∈ G : H^g = H}`.
pub fn normalizer(g: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    h.check_inside(g)?;
    let amb = g.ambient();
    let mut members = amb.empty_set();
    for x in g.ids() {
        if h.generator_ids()
            .iter()
            .all(|&t| h.contains_id(amb.conj(t, x)))
        {
            members.insert(x as usize);
        }
    }
    Ok(Subgroup::from_members(amb, members))
}

/// `C_G(H)`.
pub fn centralizer(g: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    h.check_ambient(g)?;
    let amb = g.ambient();
    let mut members = amb.empty_set();
    for x in g.ids() {
        if h.generator_ids()
            .iter()
            .all(|&t| amb.mul(t, x) == amb.mul(x, t))
        {
            members.insert(x as usize);
        }
    }
    Ok(Subgroup::from_members(amb, members))
}

/// `Z(G)`.
pub fn center(g: &Subgroup) -> Subgroup {
    centralizer(g, g).expect("same ambient")
}

/// Smallest normal subgroup of `G` containing `elements`.
pub fn normal_closure(g: &Subgroup, elements: &[ElementId]) -> Result<Subgroup> {
    if elements.iter().any(|&x| !g.contains_id(x)) {
        return Err(Error::NotContained);
    }
    let amb = g.ambient();
    let mut current = Subgroup::generated_by_ids(amb, elements);
    loop {
        let mut grew = false;
        let gens = current.generator_ids().to_vec();
        for t in gens {
            for &s in g.generator_ids() {
                let c = amb.conj(t, s);
                if !current.contains_id(c) {
                    current = current.extended_by(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(current);
        }
    }
}

/// `H_G`, the largest normal subgroup of `G` inside `H`: the intersection of
/// all conjugates of `H`.
pub fn core(g: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    h.check_inside(g)?;
    let mut current = h.members().clone();
    loop {
        let mut next = current.clone();
        for &s in g.generator_ids() {
            next.intersect_with(&conjugate_members(&current, s, g));
        }
        if next == current {
            return Ok(Subgroup::from_members(g.ambient(), current));
        }
        current = next;
    }
}

/// `G' `, the normal closure of the commutators of generators.
pub fn derived_subgroup(g: &Subgroup) -> Subgroup {
    let amb = g.ambient();
    let gens = g.generator_ids();
    let mut commutators = Vec::new();
    for &a in gens {
        for &b in gens {
            let c = amb.mul(amb.mul(amb.inv(a), amb.inv(b)), amb.mul(a, b));
            if c != amb.identity() {
                commutators.push(c);
            }
        }
    }
    normal_closure(g, &commutators).expect("commutators lie in G")
}

/// `[G, G', G'', ...]`, stopping at the first repeat.
pub fn derived_series(g: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![g.clone()];
    loop {
        let next = derived_subgroup(series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

/// A Sylow `p`-subgroup, grown one normalizing `p`-element at a time. Gives
/// the trivial subgroup when `p` does not divide `|G|`.
pub fn sylow_subgroup(g: &Subgroup, p: u64) -> Result<Subgroup> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let amb = g.ambient();
    let target = primes::p_part(g.order() as u64, p) as usize;
    let mut sylow = Subgroup::trivial(amb);
    while sylow.order() < target {
        let norm = normalizer(g, &sylow)?;
        let next = norm.ids().find_map(|y| {
            let ord = amb.element_order(y) as u64;
            let coprime = ord / primes::p_part(ord, p);
            let y_p = amb.pow(y, coprime);
            (!sylow.contains_id(y_p)).then_some(y_p)
        });
        match next {
            Some(y) => sylow = sylow.extended_by(y),
            None => unreachable!("a p-subgroup that is not Sylow grows inside its normalizer"),
        }
    }
    Ok(sylow)
}

/// `O_p(G)`.
pub fn p_core(g: &Subgroup, p: u64) -> Result<Subgroup> {
    let sylow = sylow_subgroup(g, p)?;
    core(g, &sylow)
}

/// `F(G)`, the join of the `p`-cores.
pub fn fitting(g: &Subgroup) -> Subgroup {
    let mut out = Subgroup::trivial(g.ambient());
    for p in prime_set(g).iter() {
        out = join(&out, &p_core(g, p).expect("prime")).expect("same ambient");
    }
    out
}

/// Conjugacy class of `x` under `G`, sorted.
pub fn conjugacy_class(g: &Subgroup, x: ElementId) -> Vec<ElementId> {
    let amb = g.ambient();
    let mut seen = amb.empty_set();
    seen.insert(x as usize);
    let mut queue = vec![x];
    let mut i = 0;
    while i < queue.len() {
        let y = queue[i];
        for &s in g.generator_ids() {
            let c = amb.conj(y, s);
            if !seen.contains(c as usize) {
                seen.insert(c as usize);
                queue.push(c);
            }
        }
        i += 1;
    }
    queue.sort_unstable();
    queue
}

/// Order is a power of `p`.
pub fn is_p_group(h: &Subgroup, p: u64) -> bool {
    primes::is_power_of(h.order() as u64, p)
}

pub fn is_abelian(h: &Subgroup) -> bool {
    let amb = h.ambient();
    let gens = h.generator_ids();
    gens.iter()
        .all(|&a| gens.iter().all(|&b| amb.mul(a, b) == amb.mul(b, a)))
}

pub fn is_cyclic(h: &Subgroup) -> bool {
    let amb = h.ambient();
    h.ids().any(|x| amb.element_order(x) as usize == h.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::Ambient;
    use crate::catalog;
    use crate::perm::Permutation;

    fn whole(name: &str) -> Subgroup {
        let amb = Ambient::new(catalog::by_name(name).unwrap()).unwrap();
        Subgroup::whole(&amb)
    }

    fn gen(g: &Subgroup, cycles: &[&[usize]]) -> Subgroup {
        let p = Permutation::from_cycles(g.ambient().degree(), cycles).unwrap();
        Subgroup::generated(g.ambient(), &[p]).unwrap()
    }

    // Brute-force normalizer straight from permutations.
    fn brute_normalizer(g: &Subgroup, h: &Subgroup) -> usize {
        let hs = h.element_set();
        g.element_set()
            .iter()
            .filter(|x| hs.iter().all(|y| hs.contains(&y.conjugate_by(x))))
            .count()
    }

    #[test]
    fn normalizers() {
        let a4 = whole("A4");
        let c3 = gen(&a4, &[&[1, 2, 3]]);
        let n = normalizer(&a4, &c3).unwrap();
        assert_eq!(n.order(), brute_normalizer(&a4, &c3));
        assert_eq!(n, c3);
        assert_eq!(normalizer(&a4, &a4).unwrap(), a4);

        let s4 = whole("S4");
        let p = sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(p.order(), 8);
        assert_eq!(normalizer(&s4, &p).unwrap(), p);
        assert_eq!(brute_normalizer(&s4, &p), 8);
    }

    #[test]
    fn not_contained_is_an_error() {
        let a4 = whole("A4");
        let s4 = whole("S4");
        let amb = a4.ambient().clone();
        let c2 = Subgroup::generated(
            &amb,
            &[Permutation::from_cycles(4, &[[1usize, 2], [3, 4]]).unwrap()],
        )
        .unwrap();
        let c3 = gen(&a4, &[&[1, 2, 3]]);
        assert_eq!(normalizer(&c2, &c3).unwrap_err(), Error::NotContained);
        assert_eq!(normalizer(&s4, &c3).unwrap_err(), Error::AmbientMismatch);
    }

    #[test]
    fn centers() {
        assert!(center(&whole("S4")).is_trivial());
        assert_eq!(center(&whole("H27")).order(), 3);
        let d4 = whole("D4");
        assert_eq!(center(&d4).order(), 2);
        let triv = Subgroup::trivial(d4.ambient());
        assert_eq!(centralizer(&d4, &triv).unwrap(), d4);
    }

    #[test]
    fn derived() {
        let s4 = whole("S4");
        let series = derived_series(&s4);
        let orders: Vec<_> = series.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(derived_subgroup(&whole("C6")).is_trivial());
        assert_eq!(derived_subgroup(&whole("A5")).order(), 60);
    }

    #[test]
    fn sylows() {
        assert_eq!(sylow_subgroup(&whole("L2(7)"), 7).unwrap().order(), 7);
        assert!(sylow_subgroup(&whole("S4"), 5).unwrap().is_trivial());
        assert_eq!(
            sylow_subgroup(&whole("S4"), 4).unwrap_err(),
            Error::NotPrime(4)
        );
        assert_eq!(sylow_subgroup(&whole("S7"), 2).unwrap().order(), 16);
    }

    #[test]
    fn cores() {
        let s4 = whole("S4");
        let v4 = p_core(&s4, 2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(is_normal(&s4, &v4).unwrap());
        assert_eq!(p_core(&whole("A4"), 2).unwrap().order(), 4);
        assert!(p_core(&whole("L2(7)"), 2).unwrap().is_trivial());
        let s3 = Subgroup::generated(
            s4.ambient(),
            &[
                Permutation::from_cycles(4, &[[1usize, 2]]).unwrap(),
                Permutation::from_cycles(4, &[[1usize, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(core(&s4, &s3).unwrap().is_trivial());
        assert_eq!(core(&s4, &s4).unwrap(), s4);
        assert_eq!(fitting(&s4), v4);
    }

    #[test]
    fn products_and_exponents() {
        let s4 = whole("S4");
        let h = gen(&s4, &[&[1, 2, 3]]);
        let k = gen(&s4, &[&[1, 2], &[3, 4]]);
        let hk = set_product(&h, &k).unwrap();
        let meet = intersect(&h, &k).unwrap();
        assert_eq!(hk.len(), h.order() * k.order() / meet.order());
        assert_eq!(intersect(&h, &h).unwrap(), h);
        assert_eq!(exponent(&whole("H27")), 3);
        assert_eq!(index(&s4, &h).unwrap(), 8);
    }
}
