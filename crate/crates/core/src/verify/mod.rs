//! Machine checks of the theory's claims over the catalog.
//!
//! Each claim is a static entry binding an id to the statement it checks and
//! to the function that checks it. A failing claim carries a
//! [`Counterexample`] whose observations are re-evaluated independently
//! before the failure is reported.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::ambient::{Ambient, Budget};
use crate::catalog;
use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

mod claims;
pub mod facts;
pub mod oracle;
mod schmidt;

pub use facts::{Counterexample, Fact, Observation, SubgroupRecord};

/// Outcome of one claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Not decided, with the reason (usually the exhausted budget).
    Skipped(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped(_) => "skipped",
        }
    }
}

/// One checked claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: &'static str,
    /// The statement being checked.
    pub anchor: &'static str,
    /// Groups the check ran on, in catalog order.
    pub groups: Vec<String>,
    /// Number of individual instances examined.
    pub checks: usize,
    pub verdict: Verdict,
    /// Parts of the claim that were not run, and why.
    pub notes: Vec<String>,
    pub counterexample: Option<Counterexample>,
    /// Wall-clock time, only when requested.
    pub timing_ms: Option<u64>,
}

/// What a claim check found.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub groups: Vec<String>,
    pub checks: usize,
    pub notes: Vec<String>,
    pub counterexample: Option<Counterexample>,
}

/// A claim: id, statement and check.
pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    check: fn(&Context) -> Result<Outcome>,
}

/// Options for [`run`].
#[derive(Debug, Clone, Default)]
pub struct Options {
    /// Claim ids to run; all when empty.
    pub only: Vec<String>,
    /// Include the expensive groups.
    pub slow: bool,
    /// Record wall-clock times. Off by default so reports are reproducible.
    pub timings: bool,
    pub budget: Budget,
}

type AmbientCell = Arc<OnceLock<Result<Arc<Ambient>>>>;

/// Shared state for a run: one ambient per catalog group, so lattices
/// computed by one claim are reused by the others.
pub struct Context {
    slow: bool,
    budget: Budget,
    groups: Mutex<HashMap<String, AmbientCell>>,
}

impl Context {
    pub fn new(slow: bool, budget: Budget) -> Self {
        Self {
            slow,
            budget,
            groups: Mutex::new(HashMap::new()),
        }
    }

    pub fn slow(&self) -> bool {
        self.slow
    }

    /// The catalog group `name` as a whole subgroup of its ambient.
    pub fn group(&self, name: &str) -> Result<Subgroup> {
        let cell = self
            .groups
            .lock()
            .expect("group cache poisoned")
            .entry(name.to_string())
            .or_default()
            .clone();
        let amb = cell
            .get_or_init(|| {
                catalog::by_name(name).and_then(|g| Ambient::with_budget(g, self.budget))
            })
            .clone()?;
        Ok(Subgroup::whole(&amb))
    }

    /// Catalog names of the groups of order at most `max_order`, in catalog
    /// order.
    pub fn catalog_upto(&self, max_order: u64) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for name in catalog::names() {
            if catalog::by_name(&name)?.order() <= max_order {
                out.push(name);
            }
        }
        Ok(out)
    }
}

/// The claim table, in report order.
pub static CLAIMS: [Claim; 17] = [
    Claim {
        id: "C1",
        anchor: "In S3, S4 and S6 a Sylow 2-subgroup is strongly permutable but not quasinormal.",
        check: claims::c1,
    },
    Claim {
        id: "C2",
        anchor: "In a soluble group, a Hall subgroup is P-subnormal if and only if it is strongly permutable.",
        check: claims::c2,
    },
    Claim {
        id: "C3",
        anchor: "If every Sylow subgroup is P-subnormal or strongly permutable then G is in wU; conversely, in a wU-group every Sylow subgroup is P-subnormal and strongly permutable.",
        check: claims::c3,
    },
    Claim {
        id: "C4",
        anchor: "G is supersoluble iff every Hall subgroup is P-subnormal or strongly permutable iff every Hall subgroup is P-subnormal or permutable.",
        check: claims::c4,
    },
    Claim {
        id: "C5",
        anchor: "If a Sylow r-subgroup R of a simple non-abelian group G is P-subnormal, then r = 2 and G is L2(7), L2(11) or L2(2^m) with 2^m + 1 prime; if R is also strongly permutable, then G = L2(7).",
        check: claims::c5,
    },
    Claim {
        id: "C6",
        anchor: "In L2(8) a Hall {2,7}-subgroup and in L2(9) a Sylow 2-subgroup are strongly permutable but not P-subnormal; in L2(5) a Sylow 2-subgroup is P-subnormal but not permutable.",
        check: claims::c6,
    },
    Claim {
        id: "C7",
        anchor: "For r = max pi(G) and a Sylow r-subgroup R, N_G(R) = P_G(R).",
        check: claims::c7,
    },
    Claim {
        id: "C8",
        anchor: "If H is P-subnormal in G and r = max pi(G), then O_r(H) <= O_r(G).",
        check: claims::c8,
    },
    Claim {
        id: "C9",
        anchor: "A P-subnormal Sylow r-subgroup with r > 2 makes G r-soluble; P-subnormal Sylow 3- and 5-subgroups make G soluble.",
        check: claims::c9,
    },
    Claim {
        id: "C10",
        anchor: "Structure of a Schmidt group S = P x| Q: in the non-supersoluble case Q is not permutable and N_S(Q) = P_S(Q) = Phi(P) x Q.",
        check: schmidt::c10,
    },
    Claim {
        id: "C11",
        anchor: "If all primary cyclic subgroups of G are strongly permutable, then G is supersoluble.",
        check: claims::c11,
    },
    Claim {
        id: "C12",
        anchor: "If every primary cyclic subgroup of G is P-subnormal or strongly permutable, then G is in vU.",
        check: claims::c12,
    },
    Claim {
        id: "C13",
        anchor: "In A4 every subgroup of order 2 is P-subnormal but not permutable; in L2(7) every subgroup of order 3 is permutable but not P-subnormal.",
        check: claims::c13,
    },
    Claim {
        id: "C14",
        anchor: "Every subgroup of a supersoluble group is P-subnormal.",
        check: claims::c14,
    },
    Claim {
        id: "C15",
        anchor: "In a p-group H of exponent p, for x outside Z(H), P_H(<x>) = N_H(<x>) and <x> is not permutable in H.",
        check: claims::c15,
    },
    Claim {
        id: "C16",
        anchor: "If M is maximal in a soluble group G and G = MC with C cyclic, then |G : M| is a prime or 4, and G/M_G = S4 in the latter case.",
        check: claims::c16,
    },
    Claim {
        id: "C17",
        anchor: "P-subnormality, permutizers and strong permutability agree with definition-literal brute force on every subgroup of every catalog group of order at most 100.",
        check: claims::c17,
    },
];

fn run_one(claim: &Claim, ctx: &Context, timings: bool) -> ClaimResult {
    let start = Instant::now();
    let outcome = (claim.check)(ctx);
    let timing_ms = timings.then(|| start.elapsed().as_millis() as u64);
    let mut result = ClaimResult {
        id: claim.id,
        anchor: claim.anchor,
        groups: Vec::new(),
        checks: 0,
        verdict: Verdict::Pass,
        notes: Vec::new(),
        counterexample: None,
        timing_ms,
    };
    match outcome {
        Ok(outcome) => {
            result.groups = outcome.groups;
            result.checks = outcome.checks;
            result.notes = outcome.notes;
            if let Some(cx) = outcome.counterexample {
                result.verdict = match cx.recheck() {
                    Ok(true) => Verdict::Fail,
                    Ok(false) => Verdict::Skipped("counterexample did not re-validate".into()),
                    Err(e) => Verdict::Skipped(format!("counterexample re-check failed: {e}")),
                };
                result.counterexample = Some(cx);
            }
        }
        Err(e @ Error::Resource { .. }) => result.verdict = Verdict::Skipped(e.to_string()),
        Err(e) => result.verdict = Verdict::Skipped(format!("error: {e}")),
    }
    result
}

/// Runs the selected claims concurrently; results are in table order.
pub fn run(options: &Options) -> Result<Vec<ClaimResult>> {
    for id in &options.only {
        if !CLAIMS.iter().any(|c| c.id.eq_ignore_ascii_case(id)) {
            return Err(Error::Unsupported {
                what: "claim id",
                value: id.clone(),
            });
        }
    }
    let ctx = Context::new(options.slow, options.budget);
    let selected: Vec<&Claim> = CLAIMS
        .iter()
        .filter(|c| {
            options.only.is_empty() || options.only.iter().any(|id| c.id.eq_ignore_ascii_case(id))
        })
        .collect();
    Ok(selected
        .par_iter()
        .map(|c| run_one(c, &ctx, options.timings))
        .collect())
}

/// Runs the claims in `filter` (all when empty) with the default budget.
pub fn run_claims(filter: &[&str], slow: bool) -> Result<Vec<ClaimResult>> {
    run(&Options {
        only: filter.iter().map(|s| s.to_string()).collect(),
        slow,
        ..Options::default()
    })
}

/// Human-readable report.
pub fn render_text(results: &[ClaimResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = write!(out, "{:<4} {:<7} {}", r.id, r.verdict.label(), r.anchor);
        if let Some(ms) = r.timing_ms {
            let _ = write!(out, " [{ms} ms]");
        }
        out.push('\n');
        let _ = writeln!(
            out,
            "     groups: {} ({} checks)",
            r.groups.join(", "),
            r.checks
        );
        if let Verdict::Skipped(reason) = &r.verdict {
            let _ = writeln!(out, "     skipped: {reason}");
        }
        for note in &r.notes {
            let _ = writeln!(out, "     note: {note}");
        }
        if let Some(cx) = &r.counterexample {
            let _ = writeln!(out, "     counterexample in {}:", cx.group);
            for (i, s) in cx.subgroups.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "       H{i}: order {} [{}] <{}>",
                    s.order,
                    s.fingerprint,
                    s.generators.join(", ")
                );
            }
            for o in &cx.observations {
                let _ = writeln!(out, "       {} = {}", o.fact, o.value);
            }
            if !cx.certificate.is_empty() {
                let _ = writeln!(out, "       {}", cx.certificate);
            }
        }
    }
    let count = |label: &str| {
        results
            .iter()
            .filter(|r| r.verdict.label() == label)
            .count()
    };
    let _ = writeln!(
        out,
        "{} claims: {} passed, {} failed, {} skipped",
        results.len(),
        count("pass"),
        count("fail"),
        count("skipped")
    );
    out
}

#[derive(Serialize)]
struct Report<'a> {
    claims: &'a [ClaimResult],
    passed: usize,
    failed: usize,
    skipped: usize,
}

/// Machine-readable report.
pub fn render_json(results: &[ClaimResult]) -> String {
    let count = |label: &str| {
        results
            .iter()
            .filter(|r| r.verdict.label() == label)
            .count()
    };
    let report = Report {
        claims: results,
        passed: count("pass"),
        failed: count("fail"),
        skipped: count("skipped"),
    };
    serde_json::to_string_pretty(&report).expect("report serializes")
}
