//! Structural battery for Schmidt groups `S = P ⋊ Q`, run on every Schmidt
//! subgroup of the catalog groups of order at most 360.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashSet;

use crate::classify::{is_schmidt, SchmidtStructure};
use crate::error::Result;
use crate::permutability::{is_permutable, is_strongly_permutable, permutizer};
use crate::structure::primes::is_power_of;
use crate::structure::{
    all_subgroups, center, conjugate, derived_subgroup, exponent, frattini, is_abelian, is_cyclic,
    is_normal, join, maximal_subgroups, normalizer,
};
use crate::subgroup::Subgroup;
use crate::verify::claims::{per_group, GroupCheck};
use crate::verify::facts::{Counterexample, Fact};
use crate::verify::{Context, Outcome};

/// Indices of `S`, `P` and `Q` in every counterexample below.
const S: usize = 1;
const P: usize = 2;
const Q: usize = 3;

fn order_mod(p: u64, q: u64) -> u32 {
    let mut m = 1;
    let mut x = p % q;
    while x != 1 {
        x = x * p % q;
        m += 1;
    }
    m
}

/// Schmidt subgroups of `g`, one per conjugacy class.
fn schmidt_subgroups(g: &Subgroup) -> Result<Vec<(Subgroup, SchmidtStructure)>> {
    let mut seen: FxHashSet<FixedBitSet> = FxHashSet::default();
    let mut out = Vec::new();
    for s in all_subgroups(g)?.nodes() {
        if seen.contains(s.members()) {
            continue;
        }
        if let Some(st) = is_schmidt(&s)? {
            for x in g.ids() {
                seen.insert(conjugate(&s, x).members().clone());
            }
            out.push((s, st));
        }
    }
    Ok(out)
}

fn battery(
    name: &str,
    g: &Subgroup,
    s: &Subgroup,
    st: &SchmidtStructure,
    ck: &mut GroupCheck,
) -> Result<()> {
    let amb = s.ambient();
    let (p, q) = (st.p, st.q);
    let (sp, sq) = (&st.sylow_p, &st.sylow_q);
    let base = || {
        let mut cx = Counterexample::new(name, g);
        cx.add(s);
        cx.add(sp);
        cx.add(sq);
        cx
    };
    let m = order_mod(p, q);
    let pm = p.pow(m);
    let phi_p = frattini(sp)?;
    let yq = amb.pow(st.y, q);
    let p_yq = join(sp, &Subgroup::cyclic(amb, yq))?;

    // S = P ⋊ Q with P normal and Q not
    let (pn, qn) = (is_normal(s, sp)?, is_normal(s, sq)?);
    ck.record(pn && !qn && s.order() == sp.order() * sq.order(), || {
        let mut cx = base();
        cx.observe(Fact::Normal { of: P, within: S }, pn)
            .observe(Fact::Normal { of: Q, within: S }, qn)
            .observe(Fact::Order { of: S }, s.order() as u64);
        cx
    });

    let exp = exponent(sp);
    if is_abelian(sp) {
        ck.record(exp == p && sp.order() as u64 == pm, || {
            let mut cx = base();
            cx.observe(Fact::Abelian { of: P }, true)
                .observe(Fact::Exponent { of: P }, exp)
                .observe(Fact::Order { of: P }, sp.order() as u64);
            cx.certificate(format!("order of {p} modulo {q} is {m}"));
            cx
        });
    } else {
        let (z, d) = (center(sp), derived_subgroup(sp));
        let ok = z == d && d == phi_p && (sp.order() / z.order()) as u64 == pm;
        ck.record(ok, || {
            let mut cx = base();
            let (i, j, k) = (cx.add(&z), cx.add(&d), cx.add(&phi_p));
            cx.observe(Fact::Abelian { of: P }, false)
                .observe(Fact::Equal { of: i, other: j }, z == d)
                .observe(Fact::Equal { of: j, other: k }, d == phi_p)
                .observe(Fact::Order { of: i }, z.order() as u64);
            cx.certificate(format!("order of {p} modulo {q} is {m}"));
            cx
        });
    }
    ck.record(if p > 2 { exp == p } else { exp <= 4 }, || {
        let mut cx = base();
        cx.observe(Fact::Exponent { of: P }, exp);
        cx
    });

    let zs = center(s);
    ck.record(is_cyclic(sq) && zs.contains_id(yq), || {
        let mut cx = base();
        let i = cx.add(&Subgroup::cyclic(amb, yq));
        let j = cx.add(&zs);
        cx.observe(Fact::Cyclic { of: Q }, is_cyclic(sq))
            .observe(Fact::Contains { of: i, within: j }, zs.contains_id(yq));
        cx
    });

    // the maximal subgroups are P⟨y^q⟩ and the conjugates Φ(P)⟨y^x⟩, x ∈ P
    let mut expected = vec![p_yq.clone()];
    for x in sp.ids() {
        let c = join(&phi_p, &Subgroup::cyclic(amb, amb.conj(st.y, x)))?;
        if !expected.contains(&c) {
            expected.push(c);
        }
    }
    let maximals = maximal_subgroups(s)?;
    let same = expected.len() == maximals.len() && expected.iter().all(|e| maximals.contains(e));
    ck.record(same, || {
        let mut cx = base();
        for e in &expected {
            let i = cx.add(e);
            cx.observe(Fact::Maximal { of: i, within: S }, maximals.contains(e));
        }
        for mx in maximals.iter().filter(|mx| !expected.contains(mx)) {
            let i = cx.add(mx);
            cx.observe(Fact::Maximal { of: i, within: S }, true);
        }
        cx.certificate(format!(
            "{} predicted, {} maximal",
            expected.len(),
            maximals.len()
        ));
        cx
    });

    if st.supersoluble {
        let ok = sp.order() as u64 == p
            && is_cyclic(sq)
            && is_power_of(sq.order() as u64, q)
            && (p - 1) % q == 0;
        ck.record(ok, || {
            let mut cx = base();
            cx.observe(Fact::Supersoluble { of: S }, true)
                .observe(Fact::Order { of: P }, sp.order() as u64)
                .observe(Fact::Cyclic { of: Q }, is_cyclic(sq));
            cx
        });
    }

    // elements whose order |y| does not divide lie in P⟨y^q⟩
    let y_order = amb.element_order(st.y);
    for x in s.ids() {
        if !amb.element_order(x).is_multiple_of(y_order) {
            ck.record(p_yq.contains_id(x), || {
                let mut cx = base();
                let i = cx.add(&p_yq);
                let j = cx.add(&Subgroup::cyclic(amb, x));
                cx.observe(Fact::Contains { of: j, within: i }, false)
                    .observe(Fact::Order { of: j }, amb.element_order(x) as u64);
                cx
            });
        }
    }

    let lattice = all_subgroups(s)?;
    if st.supersoluble {
        for h in lattice.nodes() {
            let ok = is_strongly_permutable(s, &h)?.holds;
            ck.record(ok, || {
                let mut cx = base();
                let i = cx.add(&h);
                cx.observe(Fact::Supersoluble { of: S }, true)
                    .observe(Fact::StronglyPermutable { of: i, within: S }, false);
                cx
            });
        }
    } else {
        let q_perm = is_permutable(s, sq)?;
        let n = normalizer(s, sq)?;
        let pz = permutizer(s, sq)?.permutizer;
        let phi_q = join(&phi_p, sq)?;
        let ok = !q_perm && n == pz && pz == phi_q && maximals.contains(&phi_q);
        ck.record(ok, || {
            let mut cx = base();
            let i = cx.add(&phi_q);
            cx.observe(Fact::Permutable { of: Q, within: S }, q_perm)
                .observe(Fact::NormalizerOrder { of: Q, within: S }, n.order() as u64)
                .observe(
                    Fact::PermutizerOrder { of: Q, within: S },
                    pz.order() as u64,
                )
                .observe(Fact::Order { of: i }, phi_q.order() as u64)
                .observe(
                    Fact::Maximal { of: i, within: S },
                    maximals.contains(&phi_q),
                );
            cx
        });

        let phi_s = frattini(s)?;
        for h in lattice.nodes() {
            if h.is_subgroup_of(sp) && permutizer(s, &h)?.permutizer == *s {
                ck.record(h == *sp || h.is_subgroup_of(&phi_s), || {
                    let mut cx = base();
                    let i = cx.add(&h);
                    let j = cx.add(&phi_s);
                    cx.observe(Fact::PermutizerOrder { of: i, within: S }, s.order() as u64)
                        .observe(Fact::Equal { of: i, other: P }, false)
                        .observe(Fact::Contains { of: i, within: j }, false);
                    cx
                });
            }
            let primary =
                !h.is_trivial() && crate::structure::primes::is_prime_power(h.order() as u64);
            if primary && is_permutable(s, &h)? {
                let normal = is_normal(s, &h)?;
                ck.record(normal, || {
                    let mut cx = base();
                    let i = cx.add(&h);
                    cx.observe(Fact::Permutable { of: i, within: S }, true)
                        .observe(Fact::Normal { of: i, within: S }, false);
                    cx
                });
            }
        }
    }

    // prime-order and order-4 cyclic subgroups all strongly permutable
    // exactly when S is supersoluble
    let mut all_sp = true;
    let mut first_bad = None;
    for &x in amb.cyclic_reps() {
        let o = amb.element_order(x);
        if s.contains_id(x) && (o == 4 || crate::structure::primes::is_prime(o as u64)) {
            let c = Subgroup::cyclic(amb, x);
            if !is_strongly_permutable(s, &c)?.holds {
                all_sp = false;
                first_bad = Some(c);
                break;
            }
        }
    }
    ck.record(all_sp == st.supersoluble, || {
        let mut cx = base();
        cx.observe(Fact::Supersoluble { of: S }, st.supersoluble);
        if let Some(c) = &first_bad {
            let i = cx.add(c);
            cx.observe(Fact::StronglyPermutable { of: i, within: S }, false);
        }
        cx
    });
    Ok(())
}

pub(super) fn c10(ctx: &Context) -> Result<Outcome> {
    let mut out = per_group(ctx, ctx.catalog_upto(360)?, |name, g| {
        let mut ck = GroupCheck::default();
        for (s, st) in schmidt_subgroups(g)? {
            battery(name, g, &s, &st, &mut ck)?;
        }
        Ok(ck)
    })?;
    for name in ["S3", "A4", "SL(2,3)"] {
        if is_schmidt(&ctx.group(name)?)?.is_none() {
            out.notes.push(format!("{name} is not a Schmidt group"));
            out.counterexample.get_or_insert_with(|| {
                let g = ctx.group(name).expect("built above");
                let mut cx = Counterexample::new(name, &g);
                cx.observe(Fact::Schmidt { of: 0 }, false);
                cx
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicative_orders() {
        assert_eq!(order_mod(2, 3), 2);
        assert_eq!(order_mod(3, 2), 1);
        assert_eq!(order_mod(2, 7), 3);
        assert_eq!(order_mod(5, 3), 2);
    }
}
