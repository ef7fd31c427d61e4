//! Full subgroup lattices and overgroup enumeration.
//!
//! The lattice of `G` is the closure of its cyclic subgroups under joins:
//! every subgroup is generated by its cyclic subgroups, so adding one cyclic
//! subgroup at a time to known nodes reaches all of them. Nodes are
//! deduplicated by their member bitset and stored sorted by order.

use std::collections::VecDeque;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::ambient::{Ambient, ElementId};
use crate::error::{Error, Result};
use crate::subgroup::{Subgroup, SubgroupData};

use super::primes::PrimeSet;
use super::{intersect, is_normal};

#[derive(Debug)]
pub(crate) struct LatticeData {
    nodes: Vec<Arc<SubgroupData>>,
    lookup: FxHashMap<FixedBitSet, usize>,
    /// `lower[i]`: nodes maximal inside node `i`.
    lower: Vec<Vec<usize>>,
}

impl LatticeData {
    fn from_nodes(mut nodes: Vec<Arc<SubgroupData>>) -> Self {
        nodes.sort_by(|a, b| {
            a.order
                .cmp(&b.order)
                .then_with(|| a.members.ones().cmp(b.members.ones()))
        });
        let lookup = nodes
            .iter()
            .enumerate()
            .map(|(i, d)| (d.members.clone(), i))
            .collect();
        let mut lower = vec![Vec::new(); nodes.len()];
        for (i, node) in nodes.iter().enumerate() {
            // Candidates in decreasing order; a candidate is a lower cover iff
            // it is not inside a cover already found.
            let mut covers: Vec<usize> = Vec::new();
            for j in (0..i).rev() {
                let sub = &nodes[j];
                if sub.order == node.order
                    || node.order % sub.order != 0
                    || !sub.members.is_subset(&node.members)
                {
                    continue;
                }
                if covers
                    .iter()
                    .all(|&c| !sub.members.is_subset(&nodes[c].members))
                {
                    covers.push(j);
                }
            }
            covers.sort_unstable();
            lower[i] = covers;
        }
        Self {
            nodes,
            lookup,
            lower,
        }
    }
}

/// All subgroups of a group, with covering relations.
#[derive(Clone)]
pub struct SubgroupLattice {
    ambient: Arc<Ambient>,
    data: Arc<LatticeData>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("nodes", &self.len())
            .finish()
    }
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.data.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> Subgroup {
        Subgroup::from_data(&self.ambient, Arc::clone(&self.data.nodes[i]))
    }

    /// Nodes sorted by order, then by element indices.
    pub fn nodes(&self) -> Vec<Subgroup> {
        (0..self.len()).map(|i| self.node(i)).collect()
    }

    pub fn top(&self) -> Subgroup {
        self.node(self.len() - 1)
    }

    pub fn bottom(&self) -> Subgroup {
        self.node(0)
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        if !Arc::ptr_eq(h.ambient(), &self.ambient) {
            return None;
        }
        self.data.lookup.get(h.members()).copied()
    }

    /// Indices of the maximal subgroups of node `i`.
    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.data.lower[i]
    }

    /// Indices of the minimal overgroups of node `i`.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| self.data.lower[j].contains(&i))
            .collect()
    }

    /// `(lower, upper)` pairs of every covering relation.
    pub fn covering_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (upper, lowers) in self.data.lower.iter().enumerate() {
            edges.extend(lowers.iter().map(|&l| (l, upper)));
        }
        edges
    }

    pub fn maximal(&self) -> Vec<Subgroup> {
        self.lower_covers(self.len() - 1)
            .iter()
            .map(|&i| self.node(i))
            .collect()
    }

    /// Nodes containing `h`.
    pub fn containing(&self, h: &Subgroup) -> Vec<Subgroup> {
        self.data
            .nodes
            .iter()
            .filter(|d| h.members().is_subset(&d.members))
            .map(|d| Subgroup::from_data(&self.ambient, Arc::clone(d)))
            .collect()
    }

    /// Nodes inside `h`, which form the lattice of `h`.
    pub fn restrict(&self, h: &Subgroup) -> SubgroupLattice {
        let nodes = self
            .data
            .nodes
            .iter()
            .filter(|d| d.members.is_subset(h.members()))
            .cloned()
            .collect();
        SubgroupLattice {
            ambient: Arc::clone(&self.ambient),
            data: Arc::new(LatticeData::from_nodes(nodes)),
        }
    }
}

fn check_order_budget(g: &Subgroup) -> Result<()> {
    let budget = g.ambient().budget();
    if g.order() > budget.max_order {
        return Err(Error::Resource {
            budget: "max-order",
            limit: budget.max_order,
            needed: g.order(),
        });
    }
    Ok(())
}

/// Every subgroup of `G`. Results are cached per ambient.
pub fn all_subgroups(g: &Subgroup) -> Result<SubgroupLattice> {
    let amb = g.ambient();
    if let Some(data) = amb.cached_lattice(g.members()) {
        return Ok(SubgroupLattice {
            ambient: Arc::clone(amb),
            data,
        });
    }
    if !g.is_whole() {
        let mut full = amb.empty_set();
        full.insert_range(..);
        if let Some(data) = amb.cached_lattice(&full) {
            let whole = SubgroupLattice {
                ambient: Arc::clone(amb),
                data,
            };
            let restricted = whole.restrict(g);
            amb.store_lattice(g.members().clone(), Arc::clone(&restricted.data));
            return Ok(restricted);
        }
    }
    check_order_budget(g)?;
    let limit = amb.budget().max_lattice_nodes;
    let cyclics: Vec<ElementId> = amb
        .cyclic_reps()
        .iter()
        .copied()
        .filter(|&c| g.contains_id(c))
        .collect();

    let mut nodes: Vec<SubgroupData> = Vec::new();
    let mut lookup: FxHashMap<FixedBitSet, usize> = FxHashMap::default();
    for &c in &cyclics {
        let members = amb.cyclic_members(c);
        let gens = if c == amb.identity() { vec![] } else { vec![c] };
        lookup.insert(members.clone(), nodes.len());
        nodes.push(SubgroupData {
            order: members.count_ones(..),
            members,
            gens,
        });
    }
    let mut i = 0;
    while i < nodes.len() {
        for &c in &cyclics {
            if nodes[i].members.contains(c as usize) {
                continue;
            }
            let joined = amb
                .extend(&nodes[i].members, &nodes[i].gens, c, usize::MAX)
                .expect("unbounded");
            if lookup.contains_key(&joined) {
                continue;
            }
            if nodes.len() >= limit {
                return Err(Error::Resource {
                    budget: "max-lattice-nodes",
                    limit,
                    needed: nodes.len() + 1,
                });
            }
            let mut gens = nodes[i].gens.clone();
            gens.push(c);
            lookup.insert(joined.clone(), nodes.len());
            nodes.push(SubgroupData {
                order: joined.count_ones(..),
                members: joined,
                gens,
            });
        }
        i += 1;
    }
    let data = Arc::new(LatticeData::from_nodes(
        nodes.into_iter().map(Arc::new).collect(),
    ));
    amb.store_lattice(g.members().clone(), Arc::clone(&data));
    Ok(SubgroupLattice {
        ambient: Arc::clone(amb),
        data,
    })
}

/// Marks the double coset `K x K`; every element of it gives the same
/// `⟨K, x⟩`.
pub(crate) fn mark_double_coset(
    amb: &Ambient,
    k: &[ElementId],
    x: ElementId,
    done: &mut FixedBitSet,
) {
    let mut left = amb.empty_set();
    for &a in k {
        left.insert(amb.mul(a, x) as usize);
    }
    for y in left.ones() {
        for &b in k {
            done.insert(amb.mul(y as ElementId, b) as usize);
        }
    }
}

/// Every `U` with `H ≤ U ≤ G`, sorted by order.
///
/// Breadth-first closure: from each known `K ⊇ H`, add `⟨K, x⟩` for
/// `x ∈ G \ K`. Complete, since any `U ⊋ K` contains some `⟨K, x⟩`.
pub fn overgroups(g: &Subgroup, h: &Subgroup) -> Result<Vec<Subgroup>> {
    h.check_inside(g)?;
    let amb = g.ambient();
    let limit = amb.budget().max_lattice_nodes;
    let mut found: Vec<Subgroup> = vec![h.clone()];
    let mut seen: FxHashMap<FixedBitSet, ()> = FxHashMap::default();
    seen.insert(h.members().clone(), ());
    let mut queue = VecDeque::from([h.clone()]);
    while let Some(k) = queue.pop_front() {
        let k_ids: Vec<ElementId> = k.ids().collect();
        let mut done = k.members().clone();
        for x in g.ids() {
            if done.contains(x as usize) {
                continue;
            }
            mark_double_coset(amb, &k_ids, x, &mut done);
            let u = k.extended_by(x);
            if seen.contains_key(u.members()) {
                continue;
            }
            if found.len() >= limit {
                return Err(Error::Resource {
                    budget: "max-lattice-nodes",
                    limit,
                    needed: found.len() + 1,
                });
            }
            seen.insert(u.members().clone(), ());
            found.push(u.clone());
            queue.push_back(u);
        }
    }
    found.sort_by(|a, b| a.canonical_cmp(b));
    Ok(found)
}

/// Co-atoms of the lattice of `G`.
pub fn maximal_subgroups(g: &Subgroup) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g)?.maximal())
}

/// Lattice nodes invariant under conjugation by the generators of `G`.
pub fn normal_subgroups(g: &Subgroup) -> Result<Vec<Subgroup>> {
    let lattice = all_subgroups(g)?;
    Ok(lattice
        .nodes()
        .into_iter()
        .filter(|h| is_normal(g, h).expect("lattice node lies in G"))
        .collect())
}

/// Non-trivial normal subgroups with no non-trivial normal subgroup of `G`
/// strictly inside.
pub fn minimal_normal_subgroups(g: &Subgroup) -> Result<Vec<Subgroup>> {
    let normals: Vec<Subgroup> = normal_subgroups(g)?
        .into_iter()
        .filter(|n| !n.is_trivial())
        .collect();
    Ok(normals
        .iter()
        .filter(|n| {
            !normals
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect())
}

/// Subgroups whose order is the full π-part of `|G|`.
pub fn hall_subgroups(g: &Subgroup, pi: &PrimeSet) -> Result<Vec<Subgroup>> {
    let target = pi.part_of(g.order() as u64) as usize;
    let lattice = all_subgroups(g)?;
    Ok(lattice
        .nodes()
        .into_iter()
        .filter(|h| h.order() == target)
        .collect())
}

/// `Φ(G)`, the intersection of the maximal subgroups.
pub fn frattini(g: &Subgroup) -> Result<Subgroup> {
    let mut out = g.clone();
    for m in maximal_subgroups(g)? {
        out = intersect(&out, &m)?;
    }
    Ok(out)
}
