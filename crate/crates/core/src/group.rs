//! Finitely generated permutation groups backed by a stabilizer chain.

use std::sync::Arc;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of elements `elements()` will materialize.
pub const DEFAULT_ENUMERATION_BOUND: usize = 100_000;

#[derive(Debug, Clone)]
struct Level {
    /// 0-based base point.
    base: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order.
    orbit: Vec<usize>,
    /// `transversal[b]` maps `base` to `b` for every `b` in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        Self {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal: {
                let mut t = vec![None; degree];
                t[base] = Some(Permutation::identity(degree));
                t
            },
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        let mut transversal = vec![None; degree];
        transversal[self.base] = Some(Permutation::identity(degree));
        let mut orbit = vec![self.base];
        let mut i = 0;
        while i < orbit.len() {
            let b = orbit[i];
            for s in &self.gens {
                let c = s.as_slice()[b] as usize;
                if transversal[c].is_none() {
                    let u = transversal[b].as_ref().unwrap().then(s);
                    transversal[c] = Some(u);
                    orbit.push(c);
                }
            }
            i += 1;
        }
        self.orbit = orbit;
        self.transversal = transversal;
    }
}

/// Base and strong generating set, built deterministically.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = Self {
            degree,
            levels: Vec::new(),
        };
        let nontrivial: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if let Some(first) = nontrivial.first() {
            let mut level = Level::new(first.first_moved().unwrap(), degree);
            level.gens = nontrivial;
            level.rebuild_orbit();
            chain.levels.push(level);
            chain.complete(0);
        }
        chain
    }

    /// Sifts `g` through the levels starting at `from`. Returns the residue
    /// and the level where sifting stopped.
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.as_slice()[level.base] as usize;
            match &level.transversal[b] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, j),
            }
        }
        let len = self.levels.len();
        (h, len)
    }

    /// Makes levels `i..` a base and strong generating set for the group
    /// generated by `levels[i].gens`, assuming levels `i+1..` already are one
    /// for the group their own generators generate.
    fn complete(&mut self, i: usize) {
        let mut oi = 0;
        while oi < self.levels[i].orbit.len() {
            let beta = self.levels[i].orbit[oi];
            let mut si = 0;
            while si < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let s = &level.gens[si];
                let u_beta = level.transversal[beta].as_ref().unwrap();
                let image = s.as_slice()[beta] as usize;
                let u_image = level.transversal[image].as_ref().unwrap();
                let schreier = u_beta.then(s).then(&u_image.inverse());
                let (residue, j) = self.sift(&schreier, i + 1);
                if !residue.is_identity() {
                    if j == self.levels.len() {
                        let base = residue.first_moved().unwrap();
                        self.levels.push(Level::new(base, self.degree));
                    }
                    for l in i + 1..=j {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit();
                    }
                    for l in (i + 1..=j).rev() {
                        self.complete(l);
                    }
                }
                si += 1;
            }
            oi += 1;
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base + 1).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (r, _) = self.sift(g, 0);
        r.is_identity()
    }

    /// Every element, written as `h · u` with `h` from the deeper levels and
    /// `u` a transversal element.
    fn enumerate(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &b in &level.orbit {
                let u = level.transversal[b].as_ref().unwrap();
                next.extend(out.iter().map(|h| h.then(u)));
            }
            out = next;
        }
        out
    }
}

/// A permutation group given by generators, with its stabilizer chain.
///
/// Cloning is cheap; the chain is shared.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<StabChain>,
}

impl PermGroup {
    /// Builds the group generated by `gens`, all of which must have the
    /// given degree. An empty list gives the trivial group.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Unsupported {
                what: "degree",
                value: "0".into(),
            });
        }
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let chain = StabChain::build(degree, &gens);
        Ok(Self {
            degree,
            generators: gens,
            chain: Arc::new(chain),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u64 {
        u64::try_from(self.chain.order()).expect("group order fits in u64")
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    /// All elements, sorted. Fails rather than truncating when the group has
    /// more than `bound` elements.
    pub fn elements_bounded(&self, bound: usize) -> Result<ElementSet> {
        let order = self.chain.order();
        if order > bound as u128 {
            return Err(Error::Resource {
                budget: "enumeration bound",
                limit: bound,
                needed: usize::try_from(order).unwrap_or(usize::MAX),
            });
        }
        Ok(ElementSet::from_unsorted(self.chain.enumerate()))
    }

    pub fn elements(&self) -> Result<ElementSet> {
        self.elements_bounded(DEFAULT_ENUMERATION_BOUND)
    }
}

/// The group generated by `gens`. All generators must share a degree; use
/// [`PermGroup::trivial`] for an empty generating set.
pub fn group_from_generators(gens: Vec<Permutation>) -> Result<PermGroup> {
    let degree = match gens.first() {
        Some(g) => g.degree(),
        None => {
            return Err(Error::Unsupported {
                what: "generating set",
                value: "empty list without a degree".into(),
            })
        }
    };
    PermGroup::new(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn symmetric_four() {
        let g = group_from_generators(vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.elements().unwrap().len(), 24);
        assert!(g.contains(&cyc(4, &[&[1, 3], &[2, 4]])));
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(5);
        assert_eq!(g.order(), 1);
        assert_eq!(g.elements().unwrap().len(), 1);
        assert!(g.chain().base().is_empty());
    }

    #[test]
    fn mixed_degrees_rejected() {
        let err = group_from_generators(vec![cyc(3, &[&[1, 2]]), cyc(4, &[&[1, 2]])]).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }

    #[test]
    fn alternating_membership() {
        let a4 = PermGroup::new(4, vec![cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&cyc(4, &[&[1, 2]])));
        assert!(a4.contains(&cyc(4, &[&[1, 2], &[3, 4]])));
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let s7 = PermGroup::new(
            7,
            vec![cyc(7, &[&[1, 2]]), cyc(7, &[&[1, 2, 3, 4, 5, 6, 7]])],
        )
        .unwrap();
        assert_eq!(s7.order(), 5040);
        let err = s7.elements_bounded(1000).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn chain_is_deterministic() {
        let gens = vec![cyc(6, &[&[1, 2, 3, 4, 5, 6]]), cyc(6, &[&[1, 2]])];
        let a = PermGroup::new(6, gens.clone()).unwrap();
        let b = PermGroup::new(6, gens).unwrap();
        assert_eq!(a.chain().base(), b.chain().base());
        assert_eq!(a.chain().transversal_sizes(), b.chain().transversal_sizes());
        assert_eq!(a.order(), 720);
    }
}
