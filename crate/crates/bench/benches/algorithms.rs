use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use permutizer::chains::{is_p_subnormal, p_subnormal_subgroup_sweep};
use permutizer::permutability::{is_strongly_permutable, permutizer};
use permutizer::structure::{all_subgroups, sylow_subgroup};
use permutizer::{catalog, group_from_generators, Ambient, Subgroup};

/// A fresh ambient, so lattice caches do not carry over between iterations.
fn fresh(name: &str) -> Subgroup {
    let amb: Arc<Ambient> = Ambient::new(catalog::by_name(name).unwrap()).unwrap();
    Subgroup::whole(&amb)
}

fn schreier_sims(c: &mut Criterion) {
    let mut group = c.benchmark_group("schreier_sims");
    for name in ["S7", "L2(11)", "H125"] {
        let gens = catalog::by_name(name).unwrap().generators().to_vec();
        group.bench_function(name, |b| {
            b.iter(|| group_from_generators(gens.clone()).unwrap().order())
        });
    }
    group.finish();
}

fn lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("lattice");
    group.sample_size(10);
    for name in ["S4", "L2(7)", "S5", "L2(11)"] {
        group.bench_function(name, |b| {
            b.iter_batched(
                || fresh(name),
                |g| all_subgroups(&g).unwrap().len(),
                BatchSize::LargeInput,
            )
        });
    }
    group.finish();
}

fn permutizers(c: &mut Criterion) {
    let mut group = c.benchmark_group("permutizer");
    for name in ["S4", "L2(7)", "L2(11)"] {
        let g = fresh(name);
        let p = sylow_subgroup(&g, 2).unwrap();
        group.bench_function(format!("{name} sylow 2"), |b| {
            b.iter(|| permutizer(&g, &p).unwrap().permutizer.order())
        });
    }
    group.sample_size(10);
    for name in ["L2(7)", "L2(11)"] {
        let g = fresh(name);
        let p = sylow_subgroup(&g, 2).unwrap();
        group.bench_function(format!("{name} strongly permutable sylow 2"), |b| {
            b.iter(|| is_strongly_permutable(&g, &p).unwrap().holds)
        });
    }
    group.finish();
}

fn p_subnormal(c: &mut Criterion) {
    let mut group = c.benchmark_group("psubnormal");
    for (name, p) in [("A4", 2), ("L2(7)", 3), ("L2(11)", 2), ("S6", 5)] {
        let g = fresh(name);
        let h = sylow_subgroup(&g, p).unwrap();
        group.bench_function(format!("{name} sylow {p}"), |b| {
            b.iter(|| is_p_subnormal(&g, &h).unwrap().is_some())
        });
    }
    group.sample_size(10);
    for name in ["S4", "S5", "L2(11)"] {
        group.bench_function(format!("{name} sweep"), |b| {
            b.iter_batched(
                || fresh(name),
                |g| p_subnormal_subgroup_sweep(&g).unwrap().verdicts().len(),
                BatchSize::LargeInput,
            )
        });
    }
    group.finish();
}

criterion_group!(benches, schreier_sims, lattice, permutizers, p_subnormal);
criterion_main!(benches);
