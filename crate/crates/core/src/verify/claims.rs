use rayon::prelude::*;

use crate::chains::{is_p_subnormal, p_subnormal_subgroup_sweep, validate_chain};
use crate::classify::{
    in_vu, in_wu, is_r_soluble, is_simple, is_soluble, is_supersoluble, primary_cyclic_subgroups,
};
use crate::error::Result;
use crate::perm::Permutation;
use crate::permutability::{is_permutable, is_quasinormal, is_strongly_permutable, permutizer};
use crate::structure::primes::is_prime;
use crate::structure::{
    all_subgroups, center, core, hall_subgroups, maximal_subgroups, normalizer, p_core, prime_set,
    quotient, set_product_size, sylow_subgroup, PrimeSet,
};
use crate::subgroup::Subgroup;
use crate::verify::facts::{Counterexample, Fact};
use crate::verify::{oracle, Context, Outcome};

/// Findings for one group.
#[derive(Default)]
pub(super) struct GroupCheck {
    pub checks: usize,
    pub failure: Option<Counterexample>,
}

impl GroupCheck {
    pub fn record(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(failure());
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

/// Runs `f` on each named group in parallel and merges the findings in
/// catalog order.
pub(super) fn per_group<F>(ctx: &Context, names: Vec<String>, f: F) -> Result<Outcome>
where
    F: Fn(&str, &Subgroup) -> Result<GroupCheck> + Sync,
{
    let results: Vec<Result<GroupCheck>> = names
        .par_iter()
        .map(|name| f(name, &ctx.group(name)?))
        .collect();
    let mut out = Outcome {
        groups: names,
        ..Outcome::default()
    };
    for r in results {
        let r = r?;
        out.checks += r.checks;
        if out.counterexample.is_none() {
            out.counterexample = r.failure;
        }
    }
    Ok(out)
}

fn soluble_upto(ctx: &Context, max: u64) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for name in ctx.catalog_upto(max)? {
        if is_soluble(&ctx.group(&name)?) {
            out.push(name);
        }
    }
    Ok(out)
}

fn ps(g: &Subgroup, h: &Subgroup) -> Result<bool> {
    Ok(is_p_subnormal(g, h)?.is_some())
}

fn sp(g: &Subgroup, h: &Subgroup) -> Result<bool> {
    Ok(is_strongly_permutable(g, h)?.holds)
}

fn hall_family(g: &Subgroup) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    for pi in prime_set(g).subsets() {
        out.extend(hall_subgroups(g, &pi)?);
    }
    Ok(out)
}

fn cyclic_of_order(g: &Subgroup, n: u32) -> Vec<Subgroup> {
    let amb = g.ambient();
    amb.cyclic_reps()
        .iter()
        .filter(|&&x| g.contains_id(x) && amb.element_order(x) == n)
        .map(|&x| Subgroup::cyclic(amb, x))
        .collect()
}

pub(super) fn c1(ctx: &Context) -> Result<Outcome> {
    let mut names = vec!["S3".to_string(), "S4".to_string()];
    if ctx.slow() {
        names.push("S6".into());
    }
    let mut out = per_group(ctx, names, |name, g| {
        let p = sylow_subgroup(g, 2)?;
        let (strong, quasi) = (sp(g, &p)?, is_quasinormal(g, &p)?);
        let mut ck = GroupCheck::default();
        ck.record(strong && !quasi, || {
            let mut cx = Counterexample::new(name, g);
            let h = cx.add(&p);
            cx.observe(Fact::StronglyPermutable { of: h, within: 0 }, strong)
                .observe(Fact::Quasinormal { of: h, within: 0 }, quasi);
            cx
        });
        Ok(ck)
    })?;
    if !ctx.slow() {
        out.notes.push("S6 skipped (slow)".into());
    }
    Ok(out)
}

pub(super) fn c2(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, soluble_upto(ctx, 360)?, |name, g| {
        let mut ck = GroupCheck::default();
        for h in hall_family(g)? {
            let (a, b) = (ps(g, &h)?, sp(g, &h)?);
            ck.record(a == b, || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&h);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, a)
                    .observe(Fact::StronglyPermutable { of: i, within: 0 }, b);
                cx
            });
        }
        Ok(ck)
    })
}

pub(super) fn c3(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, ctx.catalog_upto(360)?, |name, g| {
        let mut rows = Vec::new();
        for p in prime_set(g).iter() {
            let s = sylow_subgroup(g, p)?;
            let (a, b) = (ps(g, &s)?, sp(g, &s)?);
            rows.push((s, a, b));
        }
        let premise = rows.iter().all(|(_, a, b)| *a || *b);
        let both = rows.iter().all(|(_, a, b)| *a && *b);
        let wu = in_wu(g)?;
        let mut ck = GroupCheck::default();
        ck.record((!premise || wu) && (!wu || both), || {
            let mut cx = Counterexample::new(name, g);
            cx.observe(Fact::InWu { of: 0 }, wu);
            for (s, a, b) in &rows {
                let i = cx.add(s);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, *a)
                    .observe(Fact::StronglyPermutable { of: i, within: 0 }, *b);
            }
            cx
        });
        Ok(ck)
    })
}

pub(super) fn c4(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, soluble_upto(ctx, 360)?, |name, g| {
        let mut rows = Vec::new();
        for h in hall_family(g)? {
            let a = ps(g, &h)?;
            let b = a || sp(g, &h)?;
            let c = a || is_permutable(g, &h)?;
            rows.push((h, a, b, c));
        }
        let ss = is_supersoluble(g);
        let two = rows.iter().all(|r| r.2);
        let three = rows.iter().all(|r| r.3);
        let mut ck = GroupCheck::default();
        ck.record(ss == two && two == three, || {
            let mut cx = Counterexample::new(name, g);
            cx.observe(Fact::Supersoluble { of: 0 }, ss);
            for (h, a, _, _) in &rows {
                let i = cx.add(h);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, *a);
                if !a {
                    cx.observe(
                        Fact::StronglyPermutable { of: i, within: 0 },
                        sp(g, h).unwrap_or(false),
                    )
                    .observe(
                        Fact::Permutable { of: i, within: 0 },
                        is_permutable(g, h).unwrap_or(false),
                    );
                }
            }
            cx
        });
        Ok(ck)
    })
}

/// Orders of the simple groups allowed a P-subnormal Sylow subgroup:
/// L2(7), L2(11), and L2(2^m) with 2^m + 1 prime. Among simple groups these
/// orders determine the group.
fn allowed_simple_order(n: u64) -> bool {
    if n == 168 || n == 660 {
        return true;
    }
    (1..16).any(|m| {
        let q = 1u64 << m;
        is_prime(q + 1) && q * (q * q - 1) == n
    })
}

pub(super) fn c5(ctx: &Context) -> Result<Outcome> {
    let mut names: Vec<String> = Vec::new();
    for name in crate::catalog::names() {
        let g = ctx.group(&name)?;
        if is_simple(&g) && !is_soluble(&g) {
            names.push(name);
        }
    }
    per_group(ctx, names, |name, g| {
        let order = g.order() as u64;
        let mut ck = GroupCheck::default();
        for r in prime_set(g).iter() {
            let s = sylow_subgroup(g, r)?;
            let a = ps(g, &s)?;
            let b = a && sp(g, &s)?;
            let fail = |a: bool, b: Option<bool>| {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&s);
                cx.observe(Fact::Order { of: 0 }, order)
                    .observe(Fact::PSubnormal { of: i, within: 0 }, a);
                if let Some(b) = b {
                    cx.observe(Fact::StronglyPermutable { of: i, within: 0 }, b);
                }
                cx
            };
            ck.record(!a || (r == 2 && allowed_simple_order(order)), || {
                fail(a, None)
            });
            ck.record(!b || order == 168, || fail(a, Some(b)));
            let expected = match (name, r) {
                ("L2(7)", 2) => Some((true, Some(true), None)),
                ("L2(11)", 2) => Some((true, Some(false), None)),
                ("A5", 2) => Some((true, None, Some(false))),
                ("L2(7)" | "L2(11)" | "A5", _) => Some((false, None, None)),
                _ => None,
            };
            if let Some((want_ps, want_sp, want_perm)) = expected {
                ck.record(a == want_ps, || fail(a, None));
                if let Some(want) = want_sp {
                    let got = sp(g, &s)?;
                    ck.record(got == want, || fail(a, Some(got)));
                }
                if let Some(want) = want_perm {
                    let got = is_permutable(g, &s)?;
                    ck.record(got == want, || {
                        let mut cx = fail(a, None);
                        cx.observe(Fact::Permutable { of: 1, within: 0 }, got);
                        cx
                    });
                }
            }
        }
        Ok(ck)
    })
}

pub(super) fn c6(ctx: &Context) -> Result<Outcome> {
    let names = vec![
        "L2(5)".to_string(),
        "L2(8)".to_string(),
        "L2(9)".to_string(),
    ];
    per_group(ctx, names, |name, g| {
        let subjects = match name {
            "L2(8)" => hall_subgroups(g, &PrimeSet::new([2, 7])?)?,
            _ => vec![sylow_subgroup(g, 2)?],
        };
        let mut ck = GroupCheck::default();
        ck.record(!subjects.is_empty(), || Counterexample::new(name, g));
        for h in subjects {
            let a = ps(g, &h)?;
            let (fact, got, ok) = if name == "L2(5)" {
                let perm = is_permutable(g, &h)?;
                (Fact::Permutable { of: 1, within: 0 }, perm, a && !perm)
            } else {
                let strong = sp(g, &h)?;
                (
                    Fact::StronglyPermutable { of: 1, within: 0 },
                    strong,
                    strong && !a,
                )
            };
            ck.record(ok, || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&h);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, a)
                    .observe(fact, got);
                cx
            });
        }
        Ok(ck)
    })
}

pub(super) fn c7(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, crate::catalog::names(), |name, g| {
        let mut ck = GroupCheck::default();
        let Some(r) = prime_set(g).largest() else {
            return Ok(ck);
        };
        let s = sylow_subgroup(g, r)?;
        let n = normalizer(g, &s)?;
        let p = permutizer(g, &s)?.permutizer;
        ck.record(n == p, || {
            let mut cx = Counterexample::new(name, g);
            let i = cx.add(&s);
            cx.observe(Fact::NormalizerOrder { of: i, within: 0 }, n.order() as u64)
                .observe(Fact::PermutizerOrder { of: i, within: 0 }, p.order() as u64);
            cx
        });
        Ok(ck)
    })
}

pub(super) fn c8(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, ctx.catalog_upto(360)?, |name, g| {
        let mut ck = GroupCheck::default();
        let Some(r) = prime_set(g).largest() else {
            return Ok(ck);
        };
        let og = p_core(g, r)?;
        let sweep = p_subnormal_subgroup_sweep(g)?;
        for (h, verdict) in sweep.iter() {
            if !verdict {
                continue;
            }
            let oh = p_core(&h, r)?;
            ck.record(oh.is_subgroup_of(&og), || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&h);
                let j = cx.add(&oh);
                let k = cx.add(&og);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, true)
                    .observe(Fact::PCoreOrder { of: i, p: r }, oh.order() as u64)
                    .observe(Fact::PCoreOrder { of: 0, p: r }, og.order() as u64)
                    .observe(Fact::Contains { of: j, within: k }, false);
                cx
            });
        }
        Ok(ck)
    })
}

pub(super) fn c9(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, crate::catalog::names(), |name, g| {
        let mut ck = GroupCheck::default();
        let sylow_ps = |p: u64| -> Result<(Subgroup, bool)> {
            let s = sylow_subgroup(g, p)?;
            let a = ps(g, &s)?;
            Ok((s, a))
        };
        let (s3, a3) = sylow_ps(3)?;
        let (s5, a5) = sylow_ps(5)?;
        let primes: Vec<u64> = prime_set(g).iter().filter(|&r| r > 2).collect();
        for r in primes {
            let (s, a) = match r {
                3 => (s3.clone(), a3),
                5 => (s5.clone(), a5),
                _ => sylow_ps(r)?,
            };
            if a {
                let sol = is_r_soluble(g, r)?;
                ck.record(sol, || {
                    let mut cx = Counterexample::new(name, g);
                    let i = cx.add(&s);
                    cx.observe(Fact::PSubnormal { of: i, within: 0 }, true)
                        .observe(Fact::RSoluble { of: 0, r }, false);
                    cx
                });
            }
        }
        if a3 && a5 {
            ck.record(is_soluble(g), || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&s3);
                let j = cx.add(&s5);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, true)
                    .observe(Fact::PSubnormal { of: j, within: 0 }, true)
                    .observe(Fact::Soluble { of: 0 }, false);
                cx
            });
        }
        Ok(ck)
    })
}

pub(super) fn c11(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, ctx.catalog_upto(360)?, |name, g| {
        let mut ck = GroupCheck::default();
        if is_supersoluble(g) {
            ck.checks += 1;
            return Ok(ck);
        }
        let cyclics = primary_cyclic_subgroups(g);
        let mut premise = true;
        for c in &cyclics {
            if !sp(g, c)? {
                premise = false;
                break;
            }
        }
        ck.record(!premise, || {
            let mut cx = Counterexample::new(name, g);
            cx.observe(Fact::Supersoluble { of: 0 }, false);
            for c in &cyclics {
                let i = cx.add(c);
                cx.observe(Fact::StronglyPermutable { of: i, within: 0 }, true);
            }
            cx
        });
        Ok(ck)
    })
}

pub(super) fn c12(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, ctx.catalog_upto(360)?, |name, g| {
        let mut ck = GroupCheck::default();
        if in_vu(g)? {
            ck.checks += 1;
            return Ok(ck);
        }
        let sweep = p_subnormal_subgroup_sweep(g)?;
        let outside: Vec<Subgroup> = primary_cyclic_subgroups(g)
            .into_iter()
            .filter(|c| sweep.verdict(c) == Some(false))
            .collect();
        let mut premise = true;
        for c in &outside {
            if !sp(g, c)? {
                premise = false;
                break;
            }
        }
        ck.record(!premise, || {
            let mut cx = Counterexample::new(name, g);
            cx.observe(Fact::InVu { of: 0 }, false);
            for c in &outside {
                let i = cx.add(c);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, false)
                    .observe(Fact::StronglyPermutable { of: i, within: 0 }, true);
            }
            cx
        });
        Ok(ck)
    })
}

pub(super) fn c13(ctx: &Context) -> Result<Outcome> {
    let names = vec!["A4".to_string(), "L2(7)".to_string()];
    per_group(ctx, names, |name, g| {
        let (n, want_ps) = if name == "A4" { (2, true) } else { (3, false) };
        let subjects = cyclic_of_order(g, n);
        let mut ck = GroupCheck::default();
        ck.record(!subjects.is_empty(), || Counterexample::new(name, g));
        for h in subjects {
            let (a, b) = (ps(g, &h)?, is_permutable(g, &h)?);
            ck.record(a == want_ps && b == !want_ps, || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&h);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, a)
                    .observe(Fact::Permutable { of: i, within: 0 }, b);
                cx
            });
        }
        Ok(ck)
    })
}

pub(super) fn c14(ctx: &Context) -> Result<Outcome> {
    let mut names = Vec::new();
    for name in ctx.catalog_upto(360)? {
        if is_supersoluble(&ctx.group(&name)?) {
            names.push(name);
        }
    }
    per_group(ctx, names, |name, g| {
        let sweep = p_subnormal_subgroup_sweep(g)?;
        let mut ck = GroupCheck::default();
        for (h, verdict) in sweep.iter() {
            ck.record(verdict, || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&h);
                cx.observe(Fact::Supersoluble { of: 0 }, true)
                    .observe(Fact::PSubnormal { of: i, within: 0 }, false);
                cx
            });
        }
        Ok(ck)
    })
}

pub(super) fn c15(ctx: &Context) -> Result<Outcome> {
    let names = vec!["H27".to_string(), "H125".to_string()];
    per_group(ctx, names, |name, g| {
        let amb = g.ambient();
        let z = center(g);
        let mut ck = GroupCheck::default();
        for &x in amb.cyclic_reps() {
            if z.contains_id(x) {
                continue;
            }
            let c = Subgroup::cyclic(amb, x);
            let n = normalizer(g, &c)?;
            let p = permutizer(g, &c)?.permutizer;
            let perm = is_permutable(g, &c)?;
            ck.record(n == p && !perm, || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&c);
                cx.observe(Fact::NormalizerOrder { of: i, within: 0 }, n.order() as u64)
                    .observe(Fact::PermutizerOrder { of: i, within: 0 }, p.order() as u64)
                    .observe(Fact::Permutable { of: i, within: 0 }, perm);
                cx
            });
        }
        Ok(ck)
    })
}

pub(super) fn c16(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, soluble_upto(ctx, 360)?, |name, g| {
        let amb = g.ambient();
        let mut ck = GroupCheck::default();
        for m in maximal_subgroups(g)? {
            let Some(c) = amb
                .cyclic_reps()
                .iter()
                .map(|&x| Subgroup::cyclic(amb, x))
                .find(|c| set_product_size(&m, c).is_ok_and(|n| n == g.order()))
            else {
                continue;
            };
            let index = (g.order() / m.order()) as u64;
            let s4 = index == 4 && {
                let q = quotient(g, &core(g, &m)?)?;
                let sym4 = crate::ambient::Ambient::new(crate::catalog::symmetric(4)?)?;
                crate::structure::are_isomorphic(&q.image_whole(), &Subgroup::whole(&sym4))?
            };
            ck.record(is_prime(index) || s4, || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(&m);
                let j = cx.add(&c);
                cx.observe(Fact::Maximal { of: i, within: 0 }, true)
                    .observe(Fact::Cyclic { of: j }, true)
                    .observe(Fact::Order { of: i }, m.order() as u64);
                if index == 4 {
                    cx.observe(Fact::CoreQuotientIsS4 { of: i, within: 0 }, false);
                }
                cx.certificate(format!("G = MC with |G : M| = {index}"));
                cx
            });
        }
        Ok(ck)
    })
}

fn oracle_set(h: &Subgroup) -> oracle::PermSet {
    h.element_set().iter().cloned().collect()
}

pub(super) fn c17(ctx: &Context) -> Result<Outcome> {
    per_group(ctx, ctx.catalog_upto(100)?, |name, g| {
        let degree = g.ambient().degree();
        let elements: Vec<Permutation> = g.element_set().into_vec();
        let whole = oracle_set(g);
        let naive = oracle::lattice(degree, &elements);
        let fast = all_subgroups(g)?;
        let mut ck = GroupCheck::default();
        let fast_sets: Vec<oracle::PermSet> = fast.nodes().iter().map(oracle_set).collect();
        let mut sorted = fast_sets.clone();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        ck.record(sorted == naive, || {
            let mut cx = Counterexample::new(name, g);
            cx.certificate(format!(
                "lattice has {} nodes, brute force finds {}",
                fast.len(),
                naive.len()
            ));
            cx
        });
        if ck.failed() {
            return Ok(ck);
        }
        for (h, hs) in fast.nodes().iter().zip(&fast_sets) {
            let chain = is_p_subnormal(g, h)?;
            if let Some(chain) = &chain {
                ck.record(
                    validate_chain(chain).is_ok() && chain.connects(h, g),
                    || {
                        let mut cx = Counterexample::new(name, g);
                        let i = cx.add(h);
                        cx.observe(Fact::PSubnormal { of: i, within: 0 }, false);
                        cx
                    },
                );
            }
            let fact_ps = chain.is_some();
            ck.record(fact_ps == oracle::p_subnormal(&naive, &whole, hs), || {
                let mut cx = Counterexample::new(name, g);
                let i = cx.add(h);
                cx.observe(Fact::PSubnormal { of: i, within: 0 }, fact_ps);
                cx
            });
            let p = permutizer(g, h)?.permutizer;
            ck.record(
                oracle_set(&p) == oracle::permutizer(degree, &whole, hs),
                || {
                    let mut cx = Counterexample::new(name, g);
                    let i = cx.add(h);
                    cx.observe(Fact::PermutizerOrder { of: i, within: 0 }, p.order() as u64);
                    cx
                },
            );
            let strong = sp(g, h)?;
            ck.record(
                strong == oracle::strongly_permutable(degree, &naive, hs),
                || {
                    let mut cx = Counterexample::new(name, g);
                    let i = cx.add(h);
                    cx.observe(Fact::StronglyPermutable { of: i, within: 0 }, strong);
                    cx
                },
            );
        }
        Ok(ck)
    })
}
