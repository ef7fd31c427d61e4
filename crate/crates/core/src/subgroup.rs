use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::ambient::{Ambient, ElementId};
use crate::elements::{ElementSet, Fingerprint};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug)]
pub(crate) struct SubgroupData {
    pub(crate) members: FixedBitSet,
    pub(crate) gens: Vec<ElementId>,
    pub(crate) order: usize,
}

impl SubgroupData {
    pub(crate) fn from_members(ambient: &Ambient, members: FixedBitSet) -> Self {
        let mut current = ambient.empty_set();
        current.insert(ambient.identity() as usize);
        let mut gens = Vec::new();
        for x in members.ones() {
            if !current.contains(x) {
                current = ambient
                    .extend(&current, &gens, x as ElementId, usize::MAX)
                    .expect("unbounded");
                gens.push(x as ElementId);
            }
        }
        debug_assert_eq!(current, members);
        let order = members.count_ones(..);
        Self {
            members,
            gens,
            order,
        }
    }
}

/// A subgroup of an enumerated ambient group.
///
/// Two subgroups are equal when they share an ambient and have the same
/// elements; generating sets play no part. Cloning is cheap.
#[derive(Clone)]
pub struct Subgroup {
    ambient: Arc<Ambient>,
    data: Arc<SubgroupData>,
}

impl Subgroup {
    pub(crate) fn from_data(ambient: &Arc<Ambient>, data: Arc<SubgroupData>) -> Self {
        Self {
            ambient: Arc::clone(ambient),
            data,
        }
    }

    /// Wraps a member set that is already known to be a subgroup.
    pub(crate) fn from_members(ambient: &Arc<Ambient>, members: FixedBitSet) -> Self {
        let data = SubgroupData::from_members(ambient, members);
        Self::from_data(ambient, Arc::new(data))
    }

    pub fn whole(ambient: &Arc<Ambient>) -> Self {
        let mut members = ambient.empty_set();
        members.insert_range(..);
        Self::from_members(ambient, members)
    }

    pub fn trivial(ambient: &Arc<Ambient>) -> Self {
        Self::generated_by_ids(ambient, &[])
    }

    pub fn generated_by_ids(ambient: &Arc<Ambient>, gens: &[ElementId]) -> Self {
        let mut used = Vec::new();
        let mut current = ambient.empty_set();
        current.insert(ambient.identity() as usize);
        for &g in gens {
            if !current.contains(g as usize) {
                current = ambient.extend(&current, &used, g, usize::MAX).unwrap();
                used.push(g);
            }
        }
        let order = current.count_ones(..);
        Self::from_data(
            ambient,
            Arc::new(SubgroupData {
                members: current,
                gens: used,
                order,
            }),
        )
    }

    /// The subgroup generated by permutations, which must lie in the ambient.
    pub fn generated(ambient: &Arc<Ambient>, gens: &[Permutation]) -> Result<Self> {
        let ids = gens
            .iter()
            .map(|g| ambient.id_of_checked(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::generated_by_ids(ambient, &ids))
    }

    pub fn cyclic(ambient: &Arc<Ambient>, x: ElementId) -> Self {
        Self::generated_by_ids(ambient, &[x])
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.data.members
    }

    /// Generator indices (not necessarily minimal).
    pub fn generator_ids(&self) -> &[ElementId] {
        &self.data.gens
    }

    pub fn generators(&self) -> Vec<Permutation> {
        self.data
            .gens
            .iter()
            .map(|&g| self.ambient.element(g).clone())
            .collect()
    }

    pub fn contains_id(&self, x: ElementId) -> bool {
        self.data.members.contains(x as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.ambient.id_of(p).is_some_and(|x| self.contains_id(x))
    }

    /// Element indices in increasing order.
    pub fn ids(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.data.members.ones().map(|i| i as ElementId)
    }

    pub fn is_trivial(&self) -> bool {
        self.data.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.data.order == self.ambient.order()
    }

    pub fn same_ambient(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient)
    }

    pub(crate) fn check_ambient(&self, other: &Subgroup) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// `self ≤ other`.
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_ambient(other) && self.data.members.is_subset(&other.data.members)
    }

    /// Errors unless `self ≤ other`.
    pub(crate) fn check_inside(&self, other: &Subgroup) -> Result<()> {
        self.check_ambient(other)?;
        if self.data.members.is_subset(&other.data.members) {
            Ok(())
        } else {
            Err(Error::NotContained)
        }
    }

    /// Sorted element list; ambient indices already follow sorted order.
    pub fn element_set(&self) -> ElementSet {
        ElementSet::from_unsorted(
            self.ids()
                .map(|x| self.ambient.element(x).clone())
                .collect(),
        )
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint::of_sorted(self.ids().map(|x| self.ambient.element(x)))
    }

    /// This subgroup as a standalone permutation group of the ambient degree.
    pub fn to_group(&self) -> PermGroup {
        PermGroup::new(self.ambient.degree(), self.generators()).expect("same degree")
    }

    /// `⟨self, x⟩`.
    pub fn extended_by(&self, x: ElementId) -> Subgroup {
        if self.contains_id(x) {
            return self.clone();
        }
        let members = self
            .ambient
            .extend(&self.data.members, &self.data.gens, x, usize::MAX)
            .unwrap();
        let mut gens = self.data.gens.clone();
        gens.push(x);
        let order = members.count_ones(..);
        Self::from_data(
            &self.ambient,
            Arc::new(SubgroupData {
                members,
                gens,
                order,
            }),
        )
    }

    /// Deterministic total order: by order, then by sorted element indices.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.ids().cmp(other.ids()))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.data.members == other.data.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.data.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens [", self.order())?;
        for (i, g) in self.data.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.ambient.element(*g))?;
        }
        f.write_str("])")
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.data.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.ambient.element(*g))?;
        }
        write!(f, "> of order {}", self.order())
    }
}
