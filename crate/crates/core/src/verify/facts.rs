//! Observations that make up a counterexample, and their independent
//! re-evaluation.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::ambient::Ambient;
use crate::catalog;
use crate::chains::{is_p_subnormal, validate_chain};
use crate::classify;
use crate::error::Result;
use crate::perm::Permutation;
use crate::permutability;
use crate::structure::{
    are_isomorphic, core, exponent, is_abelian, is_cyclic, is_normal, maximal_subgroups,
    normalizer, p_core, quotient,
};
use crate::subgroup::Subgroup;
use crate::verify::oracle;

/// Largest group on which re-evaluation uses the brute-force oracles.
const ORACLE_LIMIT: usize = 100;

/// A measurable property of the subgroups of a counterexample. Indices refer
/// to [`Counterexample::subgroups`]; index 0 is the whole group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "fact", rename_all = "kebab-case")]
pub enum Fact {
    Order {
        of: usize,
    },
    Exponent {
        of: usize,
    },
    Abelian {
        of: usize,
    },
    Cyclic {
        of: usize,
    },
    /// `of ≤ in`.
    Contains {
        of: usize,
        within: usize,
    },
    Equal {
        of: usize,
        other: usize,
    },
    Normal {
        of: usize,
        within: usize,
    },
    Maximal {
        of: usize,
        within: usize,
    },
    PSubnormal {
        of: usize,
        within: usize,
    },
    Permutable {
        of: usize,
        within: usize,
    },
    StronglyPermutable {
        of: usize,
        within: usize,
    },
    Quasinormal {
        of: usize,
        within: usize,
    },
    PermutizerOrder {
        of: usize,
        within: usize,
    },
    NormalizerOrder {
        of: usize,
        within: usize,
    },
    /// `|O_p(of)|`.
    PCoreOrder {
        of: usize,
        p: u64,
    },
    Soluble {
        of: usize,
    },
    Supersoluble {
        of: usize,
    },
    RSoluble {
        of: usize,
        r: u64,
    },
    SylowTower {
        of: usize,
    },
    InWu {
        of: usize,
    },
    InVu {
        of: usize,
    },
    Schmidt {
        of: usize,
    },
    /// `within / core(of)` is isomorphic to `S4`.
    CoreQuotientIsS4 {
        of: usize,
        within: usize,
    },
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Fact::*;
        match *self {
            Order { of } => write!(f, "|H{of}|"),
            Exponent { of } => write!(f, "exp(H{of})"),
            Abelian { of } => write!(f, "H{of} abelian"),
            Cyclic { of } => write!(f, "H{of} cyclic"),
            Contains { of, within } => write!(f, "H{of} <= H{within}"),
            Equal { of, other } => write!(f, "H{of} = H{other}"),
            Normal { of, within } => write!(f, "H{of} normal in H{within}"),
            Maximal { of, within } => write!(f, "H{of} maximal in H{within}"),
            PSubnormal { of, within } => write!(f, "H{of} P-subnormal in H{within}"),
            Permutable { of, within } => write!(f, "H{of} permutable in H{within}"),
            StronglyPermutable { of, within } => {
                write!(f, "H{of} strongly permutable in H{within}")
            }
            Quasinormal { of, within } => write!(f, "H{of} quasinormal in H{within}"),
            PermutizerOrder { of, within } => write!(f, "|P_H{within}(H{of})|"),
            NormalizerOrder { of, within } => write!(f, "|N_H{within}(H{of})|"),
            PCoreOrder { of, p } => write!(f, "|O_{p}(H{of})|"),
            Soluble { of } => write!(f, "H{of} soluble"),
            Supersoluble { of } => write!(f, "H{of} supersoluble"),
            RSoluble { of, r } => write!(f, "H{of} {r}-soluble"),
            SylowTower { of } => write!(f, "H{of} has a supersoluble-type Sylow tower"),
            InWu { of } => write!(f, "H{of} in wU"),
            InVu { of } => write!(f, "H{of} in vU"),
            Schmidt { of } => write!(f, "H{of} is a Schmidt group"),
            CoreQuotientIsS4 { of, within } => write!(f, "H{within}/core(H{of}) = S4"),
        }
    }
}

/// A fact together with the value seen when the claim was checked. Boolean
/// facts use 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Observation {
    #[serde(flatten)]
    pub fact: Fact,
    pub value: u64,
}

/// A subgroup as it appears in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupRecord {
    pub order: usize,
    pub fingerprint: String,
    pub generators: Vec<String>,
}

/// Everything needed to rebuild and re-check a failing instance.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    /// Catalog name of the whole group.
    pub group: String,
    pub subgroups: Vec<SubgroupRecord>,
    pub observations: Vec<Observation>,
    /// Free-form supporting data, such as a chain or a failing overgroup.
    pub certificate: String,
    #[serde(skip)]
    degree: usize,
    #[serde(skip)]
    generators: Vec<Vec<Permutation>>,
}

impl Counterexample {
    /// Starts a counterexample in `g`, which becomes subgroup 0.
    pub fn new(group: &str, g: &Subgroup) -> Self {
        let mut out = Self {
            group: group.to_string(),
            subgroups: Vec::new(),
            observations: Vec::new(),
            certificate: String::new(),
            degree: g.ambient().degree(),
            generators: Vec::new(),
        };
        out.add(g);
        out
    }

    /// Records `h` and returns its index.
    pub fn add(&mut self, h: &Subgroup) -> usize {
        let gens = h.generators();
        self.subgroups.push(SubgroupRecord {
            order: h.order(),
            fingerprint: h.fingerprint().short(),
            generators: gens.iter().map(|p| p.to_string()).collect(),
        });
        self.generators.push(gens);
        self.subgroups.len() - 1
    }

    pub fn observe(&mut self, fact: Fact, value: impl Into<u64>) -> &mut Self {
        self.observations.push(Observation {
            fact,
            value: value.into(),
        });
        self
    }

    pub fn certificate(&mut self, text: impl Into<String>) -> &mut Self {
        self.certificate = text.into();
        self
    }

    /// Rebuilds the group from the catalog and the subgroups from their
    /// generators, then re-evaluates every observation. `Ok(true)` when all of
    /// them reproduce. A counterexample without observations never does.
    pub fn recheck(&self) -> Result<bool> {
        if self.observations.is_empty() {
            return Ok(false);
        }
        let group = catalog::by_name(&self.group)?;
        if group.degree() != self.degree {
            return Ok(false);
        }
        let amb = Ambient::new(group)?;
        let subs: Vec<Subgroup> = self
            .generators
            .iter()
            .map(|gens| Subgroup::generated(&amb, gens))
            .collect::<Result<_>>()?;
        if subs[0] != Subgroup::whole(&amb) {
            return Ok(false);
        }
        for (record, h) in self.subgroups.iter().zip(&subs) {
            if record.fingerprint != h.fingerprint().short() {
                return Ok(false);
            }
        }
        for obs in &self.observations {
            if evaluate(&obs.fact, &subs)? != obs.value {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn set(h: &Subgroup) -> oracle::PermSet {
    h.element_set().as_slice().iter().cloned().collect()
}

/// Evaluates a fact, using the brute-force oracles on small groups and
/// validated certificates elsewhere.
pub fn evaluate(fact: &Fact, subs: &[Subgroup]) -> Result<u64> {
    use Fact::*;
    let b = |x: bool| x as u64;
    let pair = |of: usize, within: usize| -> Result<(&Subgroup, &Subgroup)> {
        let (h, u) = (&subs[of], &subs[within]);
        h.check_inside(u)?;
        Ok((h, u))
    };
    let degree = subs[0].ambient().degree();
    Ok(match *fact {
        Order { of } => subs[of].order() as u64,
        Exponent { of } => exponent(&subs[of]),
        Abelian { of } => b(is_abelian(&subs[of])),
        Cyclic { of } => b(is_cyclic(&subs[of])),
        Contains { of, within } => b(subs[of].is_subgroup_of(&subs[within])),
        Equal { of, other } => b(subs[of] == subs[other]),
        Normal { of, within } => {
            let (h, u) = pair(of, within)?;
            b(is_normal(u, h)?)
        }
        Maximal { of, within } => {
            let (h, u) = pair(of, within)?;
            b(maximal_subgroups(u)?.contains(h))
        }
        PSubnormal { of, within } => {
            let (h, u) = pair(of, within)?;
            if u.order() <= ORACLE_LIMIT {
                let elements: Vec<Permutation> = set(u).into_iter().collect();
                let lattice = oracle::lattice(degree, &elements);
                b(oracle::p_subnormal(&lattice, &set(u), &set(h)))
            } else {
                match is_p_subnormal(u, h)? {
                    Some(chain) => b(validate_chain(&chain).is_ok() && chain.connects(h, u)),
                    None => 0,
                }
            }
        }
        Permutable { of, within } => {
            let (h, u) = pair(of, within)?;
            if u.order() <= ORACLE_LIMIT {
                b(oracle::permutizer(degree, &set(u), &set(h)) == set(u))
            } else {
                b(permutability::is_permutable(u, h)?)
            }
        }
        StronglyPermutable { of, within } => {
            let (h, u) = pair(of, within)?;
            if u.order() <= ORACLE_LIMIT {
                let elements: Vec<Permutation> = set(u).into_iter().collect();
                let lattice = oracle::lattice(degree, &elements);
                b(oracle::strongly_permutable(degree, &lattice, &set(h)))
            } else {
                b(permutability::is_strongly_permutable(u, h)?.holds)
            }
        }
        Quasinormal { of, within } => {
            let (h, u) = pair(of, within)?;
            if u.order() <= ORACLE_LIMIT {
                let elements: Vec<Permutation> = set(u).into_iter().collect();
                let hs = set(h);
                b(oracle::lattice(degree, &elements)
                    .iter()
                    .all(|k| oracle::permutes(&hs, k)))
            } else {
                b(permutability::is_quasinormal(u, h)?)
            }
        }
        PermutizerOrder { of, within } => {
            let (h, u) = pair(of, within)?;
            if u.order() <= ORACLE_LIMIT {
                oracle::permutizer(degree, &set(u), &set(h)).len() as u64
            } else {
                permutability::permutizer(u, h)?.permutizer.order() as u64
            }
        }
        NormalizerOrder { of, within } => {
            let (h, u) = pair(of, within)?;
            normalizer(u, h)?.order() as u64
        }
        PCoreOrder { of, p } => p_core(&subs[of], p)?.order() as u64,
        Soluble { of } => b(classify::is_soluble(&subs[of])),
        Supersoluble { of } => b(classify::is_supersoluble(&subs[of])),
        RSoluble { of, r } => b(classify::is_r_soluble(&subs[of], r)?),
        SylowTower { of } => b(classify::has_sylow_tower_supersoluble(&subs[of])),
        InWu { of } => b(classify::in_wu(&subs[of])?),
        InVu { of } => b(classify::in_vu(&subs[of])?),
        Schmidt { of } => b(classify::is_schmidt(&subs[of])?.is_some()),
        CoreQuotientIsS4 { of, within } => {
            let (h, u) = pair(of, within)?;
            let q = quotient(u, &core(u, h)?)?;
            let s4 = Subgroup::whole(&Ambient::new(catalog::symmetric(4)?)?);
            b(are_isomorphic(&q.image_whole(), &s4)?)
        }
    })
}

/// Distinct group names mentioned by a list of counterexamples.
pub fn groups_of(examples: &[Counterexample]) -> BTreeSet<String> {
    examples.iter().map(|c| c.group.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::sylow_subgroup;

    fn a4() -> Subgroup {
        Subgroup::whole(&Ambient::new(catalog::by_name("A4").unwrap()).unwrap())
    }

    #[test]
    fn true_observations_recheck() {
        let g = a4();
        let c3 = sylow_subgroup(&g, 3).unwrap();
        let mut cx = Counterexample::new("A4", &g);
        let h = cx.add(&c3);
        cx.observe(Fact::PSubnormal { of: h, within: 0 }, false)
            .observe(Fact::PermutizerOrder { of: h, within: 0 }, 3u64)
            .observe(Fact::Normal { of: h, within: 0 }, false);
        assert!(cx.recheck().unwrap());
    }

    #[test]
    fn false_observation_is_rejected() {
        let g = a4();
        let c3 = sylow_subgroup(&g, 3).unwrap();
        let mut cx = Counterexample::new("A4", &g);
        let h = cx.add(&c3);
        cx.observe(Fact::PSubnormal { of: h, within: 0 }, true);
        assert!(!cx.recheck().unwrap());
    }

    #[test]
    fn wrong_group_is_rejected() {
        let g = a4();
        let mut cx = Counterexample::new("S4", &g);
        cx.observe(Fact::Order { of: 0 }, 12u64);
        assert!(!cx.recheck().unwrap());
    }
}
