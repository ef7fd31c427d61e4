//! Group class predicates: soluble, nilpotent, supersoluble, `r`-soluble,
//! Sylow tower of supersoluble type, Schmidt, minimal non-supersoluble, and
//! the classes w𝔘 (all Sylow subgroups ℙ-subnormal) and v𝔘 (all primary
//! cyclic subgroups ℙ-subnormal).

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::ambient::ElementId;
use crate::chains::is_p_subnormal;
use crate::error::{Error, Result};
use crate::structure::primes::{factorize, is_power_of, is_prime, is_prime_power, p_part};
use crate::structure::{
    conjugacy_class, derived_series, intersect, is_normal, maximal_subgroups, normal_closure,
    normal_subgroups, p_core, prime_set, sylow_subgroup,
};
use crate::subgroup::Subgroup;

/// `G^{(k)} = 1` for some `k`.
pub fn is_soluble(g: &Subgroup) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &Subgroup) -> bool {
    prime_set(g).iter().all(|p| {
        let target = p_part(g.order() as u64, p) as usize;
        p_core(g, p).expect("prime").order() == target
    })
}

/// `M = ⟨N, x⟩` with `N ⊴ G`, `|M : N|` prime and `M ⊴ G`, for the first
/// suitable `x`.
fn prime_step_above(g: &Subgroup, n: &Subgroup) -> Option<Subgroup> {
    let amb = g.ambient();
    let index = g.order() / n.order();
    let &(pmax, _) = factorize(index as u64).last()?;
    let limit = n.order() * pmax as usize;
    let mut done: FixedBitSet = n.members().clone();
    let n_ids: Vec<ElementId> = n.ids().collect();
    for x in g.ids() {
        if done.contains(x as usize) {
            continue;
        }
        match amb.extend(n.members(), n.generator_ids(), x, limit) {
            Some(members) if is_prime((members.count_ones(..) / n.order()) as u64) => {
                let m = n.extended_by(x);
                if is_normal(g, &m).expect("inside G") {
                    return Some(m);
                }
                done.union_with(&members);
            }
            _ => {
                for &k in &n_ids {
                    done.insert(amb.mul(k, x) as usize);
                }
            }
        }
    }
    None
}

/// A normal series `N = N_0 < N_1 < … < N_k = G` with every `N_i ⊴ G` and
/// every index prime, if one exists. Such a series exists iff `G/N` is
/// supersoluble.
///
/// Each step picks the first normal subgroup of prime order in `G/N_i`. One
/// choice suffices: quotients of supersoluble groups are supersoluble, so if
/// `G/N_i` is supersoluble then so is `G/N_{i+1}` for any choice.
pub fn supersoluble_series_over(g: &Subgroup, n: &Subgroup) -> Result<Option<Vec<Subgroup>>> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let mut series = vec![n.clone()];
    loop {
        let top = series.last().unwrap();
        if top.order() == g.order() {
            return Ok(Some(series));
        }
        match prime_step_above(g, top) {
            Some(m) => series.push(m),
            None => return Ok(None),
        }
    }
}

/// A normal series of `G` with prime-order factors, if `G` is supersoluble.
pub fn supersoluble_series(g: &Subgroup) -> Option<Vec<Subgroup>> {
    supersoluble_series_over(g, &Subgroup::trivial(g.ambient())).expect("1 is normal")
}

pub fn is_supersoluble(g: &Subgroup) -> bool {
    supersoluble_series(g).is_some()
}

/// Huppert's criterion: soluble and every maximal subgroup of prime index.
/// Kept as an independent cross-check.
pub fn is_supersoluble_huppert(g: &Subgroup) -> Result<bool> {
    if !is_soluble(g) {
        return Ok(false);
    }
    Ok(maximal_subgroups(g)?
        .iter()
        .all(|m| is_prime((g.order() / m.order()) as u64)))
}

/// A chief series `1 = N_0 < … < N_k = G`: each `N_{i+1}/N_i` is a minimal
/// normal subgroup of `G/N_i`.
///
/// Among the normal closures of `N_i ∪ {x}`, one of smallest order is
/// minimal normal over `N_i`: any normal subgroup strictly between would
/// contain a smaller closure.
pub fn chief_series(g: &Subgroup) -> Vec<Subgroup> {
    let amb = g.ambient();
    let mut series = vec![Subgroup::trivial(amb)];
    loop {
        let top = series.last().unwrap().clone();
        if top.order() == g.order() {
            return series;
        }
        let mut best: Option<Subgroup> = None;
        let mut done = top.members().clone();
        for &x in amb.cyclic_reps() {
            if !g.contains_id(x) || done.contains(x as usize) {
                continue;
            }
            let mut gens = top.generator_ids().to_vec();
            gens.push(x);
            let closure = normal_closure(g, &gens).expect("inside G");
            // conjugates of x have the same closure
            for y in conjugacy_class(g, x) {
                done.insert(y as usize);
            }
            if best.as_ref().is_none_or(|b| closure.order() < b.order()) {
                best = Some(closure);
            }
        }
        series.push(best.expect("a proper normal subgroup has an element outside"));
    }
}

/// Orders of the chief factors, bottom up.
pub fn chief_factor_orders(g: &Subgroup) -> Vec<usize> {
    chief_series(g)
        .windows(2)
        .map(|w| w[1].order() / w[0].order())
        .collect()
}

/// Every chief factor is an `r`-group or an `r'`-group.
pub fn is_r_soluble(g: &Subgroup, r: u64) -> Result<bool> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    Ok(chief_factor_orders(g)
        .into_iter()
        .all(|f| is_power_of(f as u64, r) || !(f as u64).is_multiple_of(r)))
}

/// Only `1` and `G` are normal in `G`, and `G ≠ 1`.
pub fn is_simple(g: &Subgroup) -> bool {
    !g.is_trivial() && chief_series(g).len() == 2
}

/// For `p_1 > p_2 > …` the primes of `|G|`, each `G` has a normal Hall
/// `{p_1, …, p_k}`-subgroup. That subgroup, when it exists, is generated by
/// the `{p_1, …, p_k}`-elements, which is how it is found.
pub fn has_sylow_tower_supersoluble(g: &Subgroup) -> bool {
    let amb = g.ambient();
    let mut primes: Vec<u64> = prime_set(g).iter().collect();
    primes.reverse();
    let order = g.order() as u64;
    for k in 1..primes.len() {
        let pi = &primes[..k];
        let target: u64 = pi.iter().map(|&p| p_part(order, p)).product();
        let is_pi = |n: u64| factorize(n).iter().all(|(p, _)| pi.contains(p));
        let gens: Vec<ElementId> = amb
            .cyclic_reps()
            .iter()
            .copied()
            .filter(|&x| g.contains_id(x) && is_pi(amb.element_order(x) as u64))
            .collect();
        if Subgroup::generated_by_ids(amb, &gens).order() as u64 != target {
            return false;
        }
    }
    true
}

/// Structure of a Schmidt group `S = P ⋊ Q`.
#[derive(Debug, Clone)]
pub struct SchmidtStructure {
    pub p: u64,
    pub q: u64,
    /// The normal Sylow `p`-subgroup.
    pub sylow_p: Subgroup,
    /// The cyclic, non-normal Sylow `q`-subgroup.
    pub sylow_q: Subgroup,
    /// A generator of `Q`.
    pub y: ElementId,
    pub supersoluble: bool,
}

/// Non-nilpotent with every proper subgroup nilpotent. Nilpotency is
/// inherited by subgroups, so the maximal subgroups decide.
pub fn is_schmidt(g: &Subgroup) -> Result<Option<SchmidtStructure>> {
    if is_nilpotent(g) {
        return Ok(None);
    }
    if !maximal_subgroups(g)?.iter().all(is_nilpotent) {
        return Ok(None);
    }
    let primes: Vec<u64> = prime_set(g).iter().collect();
    if primes.len() != 2 {
        return Err(Error::Unsupported {
            what: "Schmidt group with prime count",
            value: primes.len().to_string(),
        });
    }
    let sylows: Vec<Subgroup> = primes
        .iter()
        .map(|&p| sylow_subgroup(g, p))
        .collect::<Result<_>>()?;
    let normal: Vec<bool> = sylows.iter().map(|s| is_normal(g, s).unwrap()).collect();
    let (pi, qi) = match normal[..] {
        [true, false] => (0, 1),
        [false, true] => (1, 0),
        _ => unreachable!("a non-nilpotent Schmidt group has exactly one normal Sylow"),
    };
    let sylow_q = sylows[qi].clone();
    let amb = g.ambient();
    let y = sylow_q
        .ids()
        .find(|&x| amb.element_order(x) as usize == sylow_q.order())
        .expect("Sylow q-subgroup of a Schmidt group is cyclic");
    Ok(Some(SchmidtStructure {
        p: primes[pi],
        q: primes[qi],
        sylow_p: sylows[pi].clone(),
        sylow_q,
        y,
        supersoluble: is_supersoluble(g),
    }))
}

/// Not supersoluble with every proper subgroup supersoluble. Supersolubility
/// is inherited by subgroups, so the maximal subgroups decide.
pub fn is_minimal_non_supersoluble(g: &Subgroup) -> Result<bool> {
    if is_supersoluble(g) {
        return Ok(false);
    }
    Ok(maximal_subgroups(g)?.iter().all(is_supersoluble))
}

/// One subgroup per distinct non-trivial cyclic subgroup of prime-power
/// order, in increasing order of generator.
pub fn primary_cyclic_subgroups(g: &Subgroup) -> Vec<Subgroup> {
    let amb = g.ambient();
    amb.cyclic_reps()
        .iter()
        .copied()
        .filter(|&x| g.contains_id(x) && is_prime_power(amb.element_order(x) as u64))
        .map(|x| Subgroup::cyclic(amb, x))
        .collect()
}

/// The first Sylow subgroup (by prime) that is not ℙ-subnormal.
pub fn wu_failure(g: &Subgroup) -> Result<Option<Subgroup>> {
    for p in prime_set(g).iter() {
        let s = sylow_subgroup(g, p)?;
        if is_p_subnormal(g, &s)?.is_none() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// The first primary cyclic subgroup that is not ℙ-subnormal.
pub fn vu_failure(g: &Subgroup) -> Result<Option<Subgroup>> {
    for c in primary_cyclic_subgroups(g) {
        if is_p_subnormal(g, &c)?.is_none() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Every Sylow subgroup is ℙ-subnormal.
pub fn in_wu(g: &Subgroup) -> Result<bool> {
    Ok(wu_failure(g)?.is_none())
}

/// Every primary cyclic subgroup is ℙ-subnormal.
pub fn in_vu(g: &Subgroup) -> Result<bool> {
    Ok(vu_failure(g)?.is_none())
}

/// `G^𝔘`, the intersection of the normal subgroups with supersoluble
/// quotient.
pub fn supersoluble_residual(g: &Subgroup) -> Result<Subgroup> {
    let mut out = g.clone();
    for n in normal_subgroups(g)? {
        if supersoluble_series_over(g, &n)?.is_some() {
            out = intersect(&out, &n)?;
        }
    }
    Ok(out)
}

/// Everything [`classify`] determines about a group.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub name: String,
    pub order: usize,
    pub primes: Vec<u64>,
    pub soluble: bool,
    pub nilpotent: bool,
    pub supersoluble: bool,
    pub in_wu: bool,
    pub in_vu: bool,
    pub schmidt: bool,
    pub minimal_non_supersoluble: bool,
    pub sylow_tower_supersoluble: bool,
    pub simple: bool,
    pub r_soluble: BTreeMap<u64, bool>,
    pub chief_factors: Vec<usize>,
    pub witnesses: Witnesses,
}

/// Certificates and counterexamples behind the flags of a
/// [`ClassificationReport`], as printable strings.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Witnesses {
    /// Orders of a normal series with prime-order factors.
    pub supersoluble_series: Option<Vec<usize>>,
    /// A Sylow subgroup that is not ℙ-subnormal.
    pub wu_failure: Option<String>,
    /// A primary cyclic subgroup that is not ℙ-subnormal.
    pub vu_failure: Option<String>,
    /// `(p, q, |P|, |Q|)` of a Schmidt group.
    pub schmidt: Option<(u64, u64, usize, usize)>,
}

/// Runs every predicate on `G`.
pub fn classify(name: &str, g: &Subgroup) -> Result<ClassificationReport> {
    let series = supersoluble_series(g);
    let wu = wu_failure(g)?;
    let vu = vu_failure(g)?;
    let schmidt = is_schmidt(g)?;
    let chief = chief_factor_orders(g);
    let primes: Vec<u64> = prime_set(g).iter().collect();
    let r_soluble = primes
        .iter()
        .map(|&r| {
            let ok = chief
                .iter()
                .all(|&f| is_power_of(f as u64, r) || !(f as u64).is_multiple_of(r));
            (r, ok)
        })
        .collect();
    Ok(ClassificationReport {
        name: name.to_string(),
        order: g.order(),
        soluble: is_soluble(g),
        nilpotent: is_nilpotent(g),
        supersoluble: series.is_some(),
        in_wu: wu.is_none(),
        in_vu: vu.is_none(),
        schmidt: schmidt.is_some(),
        minimal_non_supersoluble: is_minimal_non_supersoluble(g)?,
        sylow_tower_supersoluble: has_sylow_tower_supersoluble(g),
        simple: !g.is_trivial() && chief.len() == 1,
        r_soluble,
        chief_factors: chief,
        witnesses: Witnesses {
            supersoluble_series: series.map(|s| s.iter().map(Subgroup::order).collect()),
            wu_failure: wu.map(|s| s.to_string()),
            vu_failure: vu.map(|s| s.to_string()),
            schmidt: schmidt.map(|s| (s.p, s.q, s.sylow_p.order(), s.sylow_q.order())),
        },
        primes,
    })
}
