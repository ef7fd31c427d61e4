//! An enumerated group: every element gets an index, products are table
//! lookups, and subgroups become bitsets over the indices.

use std::sync::{Arc, Mutex, OnceLock};

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_ENUMERATION_BOUND};
use crate::perm::Permutation;
use crate::structure::lattice::LatticeData;

/// Index of an element inside its [`Ambient`]. Indices follow the sorted
/// order of the permutations, so index 0 is the identity.
pub type ElementId = u32;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 1024;

/// Resource limits for enumeration and lattice construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest group whose subgroup lattice may be built.
    pub max_order: usize,
    /// Largest number of lattice nodes before giving up.
    pub max_lattice_nodes: usize,
    /// Largest group that may be enumerated element by element.
    pub enumeration_bound: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_order: 1000,
            max_lattice_nodes: 200_000,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

pub struct Ambient {
    group: PermGroup,
    budget: Budget,
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, ElementId>,
    table: Option<Vec<ElementId>>,
    inverse: Vec<ElementId>,
    orders: Vec<u32>,
    cyclic_reps: OnceLock<Vec<ElementId>>,
    lattices: Mutex<FxHashMap<FixedBitSet, Arc<LatticeData>>>,
}

impl std::fmt::Debug for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ambient")
            .field("degree", &self.group.degree())
            .field("order", &self.elements.len())
            .finish()
    }
}

impl Ambient {
    pub fn new(group: PermGroup) -> Result<Arc<Self>> {
        Self::with_budget(group, Budget::default())
    }

    pub fn with_budget(group: PermGroup, budget: Budget) -> Result<Arc<Self>> {
        let elements = group.elements_bounded(budget.enumeration_bound)?.into_vec();
        let n = elements.len();
        let index: FxHashMap<Permutation, ElementId> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as ElementId))
            .collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then(b)]);
                }
            }
            t
        });
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut ambient = Self {
            group,
            budget,
            elements,
            index,
            table,
            inverse,
            orders: Vec::new(),
            cyclic_reps: OnceLock::new(),
            lattices: Mutex::new(FxHashMap::default()),
        };
        ambient.orders = (0..n as ElementId)
            .map(|x| {
                let mut k = 1;
                let mut y = x;
                while y != 0 {
                    y = ambient.mul(y, x);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Arc::new(ambient))
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn element(&self, id: ElementId) -> &Permutation {
        &self.elements[id as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElementId> {
        self.index.get(p).copied()
    }

    pub fn id_of_checked(&self, p: &Permutation) -> Result<ElementId> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        self.id_of(p).ok_or(Error::NotContained)
    }

    /// `a` then `b`.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.index[&self.elements[a as usize].then(&self.elements[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverse[a as usize]
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conj(&self, a: ElementId, g: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn element_order(&self, a: ElementId) -> u32 {
        self.orders[a as usize]
    }

    pub fn pow(&self, a: ElementId, k: u64) -> ElementId {
        let k = k % self.orders[a as usize] as u64;
        let mut acc = self.identity();
        let mut sq = a;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.elements.len())
    }

    /// `[1, a, a², ...]`.
    pub fn powers(&self, a: ElementId) -> Vec<ElementId> {
        let mut out = vec![self.identity()];
        let mut y = a;
        while y != self.identity() {
            out.push(y);
            y = self.mul(y, a);
        }
        out
    }

    pub fn cyclic_members(&self, a: ElementId) -> FixedBitSet {
        let mut set = self.empty_set();
        for y in self.powers(a) {
            set.insert(y as usize);
        }
        set
    }

    /// One generator per distinct cyclic subgroup: the smallest index among
    /// the generators of that subgroup. Sorted.
    pub fn cyclic_reps(&self) -> &[ElementId] {
        self.cyclic_reps.get_or_init(|| {
            let n = self.elements.len();
            let mut seen = FixedBitSet::with_capacity(n);
            let mut reps = Vec::new();
            for x in 0..n as ElementId {
                if seen.contains(x as usize) {
                    continue;
                }
                reps.push(x);
                let ord = self.orders[x as usize] as u64;
                let powers = self.powers(x);
                for (k, &y) in powers.iter().enumerate() {
                    if num_integer::gcd(k as u64, ord) == 1 || ord == 1 {
                        seen.insert(y as usize);
                    }
                }
            }
            reps
        })
    }

    /// Grows the subgroup `base` (generated by `base_gens`) by the element
    /// `x`, coset by coset. Returns `None` as soon as the result would exceed
    /// `limit` elements.
    pub fn extend(
        &self,
        base: &FixedBitSet,
        base_gens: &[ElementId],
        x: ElementId,
        limit: usize,
    ) -> Option<FixedBitSet> {
        if base.contains(x as usize) {
            return Some(base.clone());
        }
        let base_elems: Vec<ElementId> = base.ones().map(|i| i as ElementId).collect();
        let step = base_elems.len();
        let mut count = step;
        let mut members = base.clone();
        let gens: Vec<ElementId> = base_gens.iter().copied().chain([x]).collect();
        let mut reps = vec![x];
        count += step;
        if count > limit {
            return None;
        }
        for &h in &base_elems {
            members.insert(self.mul(h, x) as usize);
        }
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &g in &gens {
                let t = self.mul(r, g);
                if members.contains(t as usize) {
                    continue;
                }
                count += step;
                if count > limit {
                    return None;
                }
                for &h in &base_elems {
                    members.insert(self.mul(h, t) as usize);
                }
                reps.push(t);
            }
            i += 1;
        }
        Some(members)
    }

    /// Subgroup generated by `gens`, as a member set.
    pub fn close(&self, gens: &[ElementId]) -> FixedBitSet {
        let mut members = self.empty_set();
        members.insert(self.identity() as usize);
        let mut used = Vec::new();
        for &g in gens {
            if !members.contains(g as usize) {
                members = self
                    .extend(&members, &used, g, usize::MAX)
                    .expect("unbounded");
                used.push(g);
            }
        }
        members
    }

    pub(crate) fn cached_lattice(&self, key: &FixedBitSet) -> Option<Arc<LatticeData>> {
        self.lattices.lock().unwrap().get(key).cloned()
    }

    pub(crate) fn store_lattice(&self, key: FixedBitSet, data: Arc<LatticeData>) {
        self.lattices.lock().unwrap().insert(key, data);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let t = Permutation::from_cycles(n, &[[1usize, 2]]).unwrap();
        let c = Permutation::from_cycles(n, &[(1..=n).collect::<Vec<_>>()]).unwrap();
        PermGroup::new(n, vec![t, c]).unwrap()
    }

    #[test]
    fn table_agrees_with_composition() {
        let amb = Ambient::new(sym(4)).unwrap();
        for a in 0..24 {
            for b in 0..24 {
                let p = amb.element(a).then(amb.element(b));
                assert_eq!(amb.element(amb.mul(a, b)), &p);
            }
            assert_eq!(amb.mul(a, amb.inv(a)), amb.identity());
        }
        assert!(amb.element(0).is_identity());
    }

    #[test]
    fn cyclic_subgroup_count_s4() {
        // 1 + 9 involution subgroups + 4 of order 3 + 3 of order 4
        let amb = Ambient::new(sym(4)).unwrap();
        assert_eq!(amb.cyclic_reps().len(), 17);
    }

    #[test]
    fn extend_respects_limit() {
        let amb = Ambient::new(sym(4)).unwrap();
        let trivial = amb.close(&[]);
        let t = amb
            .id_of(&Permutation::from_cycles(4, &[[1usize, 2]]).unwrap())
            .unwrap();
        let c = amb
            .id_of(&Permutation::from_cycles(4, &[[1usize, 2, 3, 4]]).unwrap())
            .unwrap();
        let ct = amb.extend(&trivial, &[], t, usize::MAX).unwrap();
        assert_eq!(ct.count_ones(..), 2);
        assert!(amb.extend(&ct, &[t], c, 10).is_none());
        assert_eq!(amb.extend(&ct, &[t], c, 24).unwrap().count_ones(..), 24);
        assert_eq!(amb.close(&[t, c]).count_ones(..), 24);
    }
}
