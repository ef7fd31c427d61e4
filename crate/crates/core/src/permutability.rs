//! Permutizers, permutability, strong permutability and quasinormality.
//!
//! The permutizer of `H` in `U` is `P_U(H) = ⟨x ∈ U : ⟨x⟩H = H⟨x⟩⟩`. `H` is
//! permutable in `G` when `P_G(H) = G` and strongly permutable when
//! `P_U(H) = U` for every `H ≤ U ≤ G`. Note that "permutable" here is not
//! the classical sense (which is quasinormality, see [`is_quasinormal`]).

use fixedbitset::FixedBitSet;

use crate::ambient::ElementId;
use crate::error::Result;
use crate::perm::Permutation;
use crate::structure::{all_subgroups, overgroups, product_members};
use crate::subgroup::Subgroup;

/// `P_U(H)` together with the cyclic subgroups that generate it.
#[derive(Debug, Clone)]
pub struct PermutizerReport {
    /// The group `U` the permutizer is taken in.
    pub ambient: Subgroup,
    /// The subgroup `H`.
    pub target: Subgroup,
    /// One generator for each cyclic subgroup `⟨x⟩ ≤ U` permuting with `H`.
    pub witnesses: Vec<ElementId>,
    pub permutizer: Subgroup,
}

impl PermutizerReport {
    pub fn witness_permutations(&self) -> Vec<Permutation> {
        let amb = self.ambient.ambient();
        self.witnesses
            .iter()
            .map(|&x| amb.element(x).clone())
            .collect()
    }
}

/// Outcome of a strong permutability check.
#[derive(Debug, Clone)]
pub struct StrongPermVerdict {
    pub holds: bool,
    /// The smallest `U` (in canonical order) with `P_U(H) ≠ U`.
    pub failing_overgroup: Option<Subgroup>,
    /// Overgroups examined before the verdict was reached.
    pub checked_overgroups: usize,
}

fn ids(h: &Subgroup) -> Vec<ElementId> {
    h.ids().collect()
}

/// `HK = KH` as element sets.
pub fn permutes_with(h: &Subgroup, k: &Subgroup) -> Result<bool> {
    h.check_ambient(k)?;
    let (hs, ks) = (ids(h), ids(k));
    Ok(product_members(h, &hs, &ks) == product_members(h, &ks, &hs))
}

fn cyclic_permutes(h: &Subgroup, h_ids: &[ElementId], x: ElementId) -> bool {
    if h.contains_id(x) {
        return true;
    }
    let powers = h.ambient().powers(x);
    product_members(h, &powers, h_ids) == product_members(h, h_ids, &powers)
}

/// Generators of the cyclic subgroups of `U` (one each) that permute with
/// `H`, in increasing order.
fn witnesses_in(u: &Subgroup, h: &Subgroup) -> Vec<ElementId> {
    let h_ids = ids(h);
    u.ambient()
        .cyclic_reps()
        .iter()
        .copied()
        .filter(|&x| u.contains_id(x) && cyclic_permutes(h, &h_ids, x))
        .collect()
}

/// `H` extended by the witnesses that lie in `members`, stopping early once
/// the result fills `members`.
fn close_inside(h: &Subgroup, witnesses: &[ElementId], members: &FixedBitSet) -> Subgroup {
    let target = members.count_ones(..);
    let mut out = h.clone();
    for &x in witnesses {
        if out.order() == target {
            break;
        }
        if members.contains(x as usize) {
            out = out.extended_by(x);
        }
    }
    out
}

/// `P_U(H)`. Errors unless `H ≤ U`.
pub fn permutizer(u: &Subgroup, h: &Subgroup) -> Result<PermutizerReport> {
    h.check_inside(u)?;
    let witnesses = witnesses_in(u, h);
    let mut permutizer = h.clone();
    for &x in &witnesses {
        permutizer = permutizer.extended_by(x);
    }
    Ok(PermutizerReport {
        ambient: u.clone(),
        target: h.clone(),
        witnesses,
        permutizer,
    })
}

/// `P_G(H) = G`.
pub fn is_permutable(g: &Subgroup, h: &Subgroup) -> Result<bool> {
    h.check_inside(g)?;
    let witnesses = witnesses_in(g, h);
    Ok(close_inside(h, &witnesses, g.members()).order() == g.order())
}

/// `P_U(H) = U` for every `H ≤ U ≤ G`, checked in increasing order of `U`.
///
/// Whether `⟨x⟩` permutes with `H` does not depend on `U`, so the witnesses
/// are computed once in `G` and each `P_U(H)` is their closure inside `U`.
pub fn is_strongly_permutable(g: &Subgroup, h: &Subgroup) -> Result<StrongPermVerdict> {
    h.check_inside(g)?;
    let witnesses = witnesses_in(g, h);
    let mut checked = 0;
    for u in overgroups(g, h)? {
        checked += 1;
        if close_inside(h, &witnesses, u.members()).order() != u.order() {
            return Ok(StrongPermVerdict {
                holds: false,
                failing_overgroup: Some(u),
                checked_overgroups: checked,
            });
        }
    }
    Ok(StrongPermVerdict {
        holds: true,
        failing_overgroup: None,
        checked_overgroups: checked,
    })
}

/// `H` permutes with every subgroup of `G`.
pub fn is_quasinormal(g: &Subgroup, h: &Subgroup) -> Result<bool> {
    h.check_inside(g)?;
    let lattice = all_subgroups(g)?;
    for k in lattice.nodes() {
        if !permutes_with(h, &k)? {
            return Ok(false);
        }
    }
    Ok(true)
}
