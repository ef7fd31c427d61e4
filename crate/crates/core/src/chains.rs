//! ℙ-subnormality: chains `H = H_0 < H_1 < … < H_n = G` in which every index
//! `|H_i : H_{i-1}|` is prime.
//!
//! If `|M : K|` is prime then `K` is maximal in `M`, so `M = ⟨K, x⟩` for any
//! `x ∈ M \ K`. Single-element extensions of `K` therefore reach every
//! possible next link, which is what the search enumerates.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::ambient::ElementId;
use crate::error::{Error, Result};
use crate::structure::lattice::mark_double_coset;
use crate::structure::primes::{factorize, is_prime};
use crate::structure::{all_subgroups, SubgroupLattice};
use crate::subgroup::Subgroup;

/// A chain of subgroups, smallest first, each of prime index in the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubnormalChain {
    links: Vec<Subgroup>,
}

/// Why a chain fails validation. `step` is the index of the upper link.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainDefect {
    Empty,
    AmbientMismatch { step: usize },
    NotContained { step: usize },
    IndexNotPrime { step: usize, index: usize },
}

impl fmt::Display for ChainDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainDefect::Empty => f.write_str("empty chain"),
            ChainDefect::AmbientMismatch { step } => {
                write!(f, "link {step} lives in a different ambient")
            }
            ChainDefect::NotContained { step } => {
                write!(f, "link {} is not contained in link {step}", step - 1)
            }
            ChainDefect::IndexNotPrime { step, index } => {
                write!(f, "index {index} at link {step} is not prime")
            }
        }
    }
}

impl SubnormalChain {
    /// Builds a chain without checking it. Repeated neighbours (unit steps)
    /// are collapsed.
    pub fn new(mut links: Vec<Subgroup>) -> Self {
        links.dedup();
        Self { links }
    }

    pub fn links(&self) -> &[Subgroup] {
        &self.links
    }

    pub fn start(&self) -> &Subgroup {
        &self.links[0]
    }

    pub fn end(&self) -> &Subgroup {
        self.links.last().expect("chains are non-empty")
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.links.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `|H_i : H_{i-1}|` for each step.
    pub fn indices(&self) -> Vec<usize> {
        self.links
            .windows(2)
            .map(|w| w[1].order() / w[0].order())
            .collect()
    }

    /// Whether this chain is valid and runs from `h` to `g`.
    pub fn connects(&self, h: &Subgroup, g: &Subgroup) -> bool {
        validate_chain(self).is_ok() && self.start() == h && self.end() == g
    }
}

/// Re-checks every inclusion and the primality of every index.
pub fn validate_chain(chain: &SubnormalChain) -> Result<(), ChainDefect> {
    if chain.links.is_empty() {
        return Err(ChainDefect::Empty);
    }
    for (i, w) in chain.links.windows(2).enumerate() {
        let step = i + 1;
        if !w[0].same_ambient(&w[1]) {
            return Err(ChainDefect::AmbientMismatch { step });
        }
        if !w[0].is_subgroup_of(&w[1]) {
            return Err(ChainDefect::NotContained { step });
        }
        let index = w[1].order() / w[0].order();
        if !is_prime(index as u64) {
            return Err(ChainDefect::IndexNotPrime { step, index });
        }
    }
    Ok(())
}

/// Distinct `M = ⟨K, x⟩ ≤ G` with `|M : K|` prime, in order of discovery.
fn prime_index_successors(g: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
    let amb = g.ambient();
    let index = g.order() / k.order();
    let Some(&(pmax, _)) = factorize(index as u64).last() else {
        return Vec::new();
    };
    let limit = k.order() * pmax as usize;
    let k_ids: Vec<ElementId> = k.ids().collect();
    let mut done: FixedBitSet = k.members().clone();
    let mut out = Vec::new();
    for x in g.ids() {
        if done.contains(x as usize) {
            continue;
        }
        match amb.extend(k.members(), k.generator_ids(), x, limit) {
            Some(members) if is_prime((members.count_ones(..) / k.order()) as u64) => {
                // every element of M \ K generates M over K
                done.union_with(&members);
                let m = k.extended_by(x);
                debug_assert_eq!(m.members(), &members);
                out.push(m);
            }
            _ => mark_double_coset(amb, &k_ids, x, &mut done),
        }
    }
    out
}

/// A shortest chain of prime indices from `H` up to `G`, if one exists.
///
/// Breadth-first over subgroups containing `H`, each visited once.
pub fn is_p_subnormal(g: &Subgroup, h: &Subgroup) -> Result<Option<SubnormalChain>> {
    h.check_inside(g)?;
    let limit = g.ambient().budget().max_lattice_nodes;
    let mut nodes: Vec<(Subgroup, usize)> = vec![(h.clone(), usize::MAX)];
    let mut seen: FxHashMap<FixedBitSet, ()> = FxHashMap::default();
    seen.insert(h.members().clone(), ());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let k = nodes[i].0.clone();
        if k.order() == g.order() {
            let mut links = Vec::new();
            let mut j = i;
            while j != usize::MAX {
                links.push(nodes[j].0.clone());
                j = nodes[j].1;
            }
            links.reverse();
            return Ok(Some(SubnormalChain::new(links)));
        }
        for m in prime_index_successors(g, &k) {
            if seen.contains_key(m.members()) {
                continue;
            }
            if nodes.len() >= limit {
                return Err(Error::Resource {
                    budget: "max-lattice-nodes",
                    limit,
                    needed: nodes.len() + 1,
                });
            }
            seen.insert(m.members().clone(), ());
            nodes.push((m, i));
            queue.push_back(nodes.len() - 1);
        }
    }
    Ok(None)
}

/// ℙ-subnormality of every subgroup of `G`.
#[derive(Debug, Clone)]
pub struct PSubnormalSweep {
    lattice: SubgroupLattice,
    verdicts: Vec<bool>,
    /// For ℙ-subnormal nodes below the top: the next link of a shortest chain.
    next: Vec<Option<usize>>,
}

impl PSubnormalSweep {
    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    /// Verdicts aligned with the lattice nodes.
    pub fn verdicts(&self) -> &[bool] {
        &self.verdicts
    }

    pub fn verdict(&self, h: &Subgroup) -> Option<bool> {
        self.lattice.position(h).map(|i| self.verdicts[i])
    }

    /// Pairs of node and verdict, in lattice order.
    pub fn iter(&self) -> impl Iterator<Item = (Subgroup, bool)> + '_ {
        (0..self.lattice.len()).map(|i| (self.lattice.node(i), self.verdicts[i]))
    }

    /// A shortest chain from node `h` to the top, if `h` is ℙ-subnormal.
    pub fn chain(&self, h: &Subgroup) -> Option<SubnormalChain> {
        let mut i = self.lattice.position(h)?;
        if !self.verdicts[i] {
            return None;
        }
        let mut links = vec![self.lattice.node(i)];
        while let Some(j) = self.next[i] {
            links.push(self.lattice.node(j));
            i = j;
        }
        Some(SubnormalChain::new(links))
    }
}

/// Decides ℙ-subnormality for every lattice node at once.
///
/// A prime-index step is always a covering relation, so the verdicts follow
/// from one pass down the lattice: a node is ℙ-subnormal iff it is the top or
/// some upper cover of prime index is.
pub fn p_subnormal_subgroup_sweep(g: &Subgroup) -> Result<PSubnormalSweep> {
    let lattice = all_subgroups(g)?;
    let n = lattice.len();
    let mut upper: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (lo, hi) in lattice.covering_edges() {
        upper[lo].push(hi);
    }
    let orders: Vec<usize> = (0..n).map(|i| lattice.node(i).order()).collect();
    let mut verdicts = vec![false; n];
    let mut depth = vec![usize::MAX; n];
    let mut next = vec![None; n];
    verdicts[n - 1] = true;
    depth[n - 1] = 0;
    for i in (0..n - 1).rev() {
        for &j in &upper[i] {
            if verdicts[j] && is_prime((orders[j] / orders[i]) as u64) && depth[j] + 1 < depth[i] {
                verdicts[i] = true;
                depth[i] = depth[j] + 1;
                next[i] = Some(j);
            }
        }
    }
    Ok(PSubnormalSweep {
        lattice,
        verdicts,
        next,
    })
}
