//! Command-line front end: classification, subgroup predicates, lattices and
//! the claim checker.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use permutizer::catalog;
use permutizer::chains::is_p_subnormal;
use permutizer::classify::classify;
use permutizer::permutability::{is_strongly_permutable, permutes_with, permutizer};
use permutizer::structure::all_subgroups;
use permutizer::verify;
use permutizer::{Ambient, Budget, Error, Subgroup};

/// Permutizers, strong permutability and P-subnormality in finite
/// permutation groups.
///
/// Groups are catalog names (S4, A5, L2(7), SL(2,3), H27, ...) or paths of
/// group files. Subgroups are `sylow:p`, `hall:p,q`, `gens:(1 2),(3 4)` or
/// `cyclic:(1 2 3)`.
///
/// Exit codes: 0 success or true, 1 false, 2 usage error or unknown group,
/// 3 resource limit.
#[derive(Parser, Debug)]
#[command(name = "permutizer", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Print full certificates (chains, witnesses, failing overgroups).
    #[arg(long, global = true)]
    certificate: bool,
    /// Largest group whose subgroup lattice may be built.
    #[arg(long, global = true, env = "PERMUTIZER_MAX_ORDER", default_value_t = Budget::default().max_order)]
    max_order: usize,
    /// Largest number of lattice nodes.
    #[arg(long, global = true, env = "PERMUTIZER_MAX_LATTICE_NODES", default_value_t = Budget::default().max_lattice_nodes)]
    max_lattice_nodes: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide every group class predicate for a group.
    Classify { group: String },
    /// Decide a predicate for a subgroup.
    Check {
        predicate: Predicate,
        group: String,
        subgroup: String,
    },
    /// Compute the permutizer P_G(H).
    Permutizer { group: String, subgroup: String },
    /// List all subgroups and the covering relation.
    Lattice { group: String },
    /// Check the theory's claims over the catalog.
    VerifyPaper {
        /// Claim ids to run (all by default).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Include the expensive groups.
        #[arg(long)]
        slow: bool,
        /// Record wall-clock times.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Predicate {
    Permutizer,
    Permutable,
    StronglyPermutable,
    Quasinormal,
    Psubnormal,
}

impl Predicate {
    fn name(self) -> &'static str {
        match self {
            Predicate::Permutizer => "permutizer",
            Predicate::Permutable => "permutable",
            Predicate::StronglyPermutable => "strongly-permutable",
            Predicate::Quasinormal => "quasinormal",
            Predicate::Psubnormal => "psubnormal",
        }
    }
}

/// A subgroup as printed in reports.
#[derive(Serialize)]
struct Record {
    order: usize,
    fingerprint: String,
    generators: Vec<String>,
}

impl Record {
    fn of(h: &Subgroup) -> Self {
        Self {
            order: h.order(),
            fingerprint: h.fingerprint().short(),
            generators: h.generators().iter().map(ToString::to_string).collect(),
        }
    }

    fn line(&self) -> String {
        format!(
            "order {} [{}] <{}>",
            self.order,
            self.fingerprint,
            self.generators.join(", ")
        )
    }
}

#[derive(Serialize)]
struct CheckReport {
    predicate: &'static str,
    group: String,
    subgroup: Record,
    #[serde(skip_serializing_if = "Option::is_none")]
    holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    permutizer: Option<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chain: Option<Vec<Record>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failing_overgroup: Option<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    non_permuting: Option<Record>,
}

#[derive(Serialize)]
struct LatticeReport {
    group: String,
    order: usize,
    nodes: Vec<Record>,
    edges: Vec<(usize, usize)>,
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

struct Run {
    json: bool,
    certificate: bool,
    budget: Budget,
}

impl Run {
    fn group(&self, spec: &str) -> Result<(String, Subgroup), Failure> {
        let (name, g) = catalog::resolve(spec)?;
        let amb: Arc<Ambient> = Ambient::with_budget(g, self.budget)?;
        Ok((name, Subgroup::whole(&amb)))
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(value).expect("report serializes")
            );
        } else {
            print!("{}", text());
        }
    }

    fn classify(&self, spec: &str) -> Result<bool, Failure> {
        let (name, g) = self.group(spec)?;
        let report = classify(&name, &g)?;
        self.emit(&report, || {
            let w = &report.witnesses;
            let mut out = format!("{} (order {})\n", report.name, report.order);
            let primes: Vec<String> = report.primes.iter().map(u64::to_string).collect();
            out += &format!("primes = {{{}}}\n", primes.join(", "));
            for (label, value) in [
                ("soluble", report.soluble),
                ("nilpotent", report.nilpotent),
                ("supersoluble", report.supersoluble),
                ("in_wU", report.in_wu),
                ("in_vU", report.in_vu),
                ("schmidt", report.schmidt),
                ("minimal_non_supersoluble", report.minimal_non_supersoluble),
                ("sylow_tower_supersoluble", report.sylow_tower_supersoluble),
                ("simple", report.simple),
            ] {
                out += &format!("{label} = {value}\n");
            }
            for (r, ok) in &report.r_soluble {
                out += &format!("{r}-soluble = {ok}\n");
            }
            let chief: Vec<String> = report.chief_factors.iter().map(usize::to_string).collect();
            out += &format!("chief factor orders = {}\n", chief.join(", "));
            if report.simple && report.order > 1 && !report.soluble {
                out += "note: simple non-abelian group\n";
            }
            if let Some(s) = &w.supersoluble_series {
                let s: Vec<String> = s.iter().map(usize::to_string).collect();
                out += &format!("supersoluble series orders: {}\n", s.join(" < "));
            }
            if let Some(s) = &w.wu_failure {
                out += &format!("Sylow subgroup not P-subnormal: {s}\n");
            }
            if let Some(s) = &w.vu_failure {
                out += &format!("primary cyclic subgroup not P-subnormal: {s}\n");
            }
            if let Some((p, q, np, nq)) = w.schmidt {
                out += &format!("Schmidt structure: p = {p}, q = {q}, |P| = {np}, |Q| = {nq}\n");
            }
            out
        });
        Ok(true)
    }

    fn check(&self, predicate: Predicate, group: &str, subgroup: &str) -> Result<bool, Failure> {
        let (name, g) = self.group(group)?;
        let h = catalog::resolve_subgroup(&g, subgroup)?;
        let mut report = CheckReport {
            predicate: predicate.name(),
            group: name,
            subgroup: Record::of(&h),
            holds: None,
            permutizer: None,
            witnesses: None,
            chain: None,
            failing_overgroup: None,
            non_permuting: None,
        };
        match predicate {
            Predicate::Permutizer | Predicate::Permutable => {
                let p = permutizer(&g, &h)?;
                if predicate == Predicate::Permutable {
                    report.holds = Some(p.permutizer == g);
                }
                report.witnesses = Some(
                    p.witness_permutations()
                        .iter()
                        .map(ToString::to_string)
                        .collect(),
                );
                report.permutizer = Some(Record::of(&p.permutizer));
            }
            Predicate::StronglyPermutable => {
                let v = is_strongly_permutable(&g, &h)?;
                report.holds = Some(v.holds);
                report.failing_overgroup = v.failing_overgroup.as_ref().map(Record::of);
                if let Some(u) = &v.failing_overgroup {
                    report.permutizer = Some(Record::of(&permutizer(u, &h)?.permutizer));
                }
            }
            Predicate::Quasinormal => {
                let amb = g.ambient();
                let mut witness = None;
                for &x in amb.cyclic_reps() {
                    if !g.contains_id(x) {
                        continue;
                    }
                    let c = Subgroup::cyclic(amb, x);
                    if !permutes_with(&c, &h)? {
                        witness = Some(c);
                        break;
                    }
                }
                report.holds = Some(witness.is_none());
                report.non_permuting = witness.as_ref().map(Record::of);
            }
            Predicate::Psubnormal => {
                let chain = is_p_subnormal(&g, &h)?;
                report.holds = Some(chain.is_some());
                report.chain = chain.map(|c| c.links().iter().map(Record::of).collect());
            }
        }
        self.emit(&report, || self.check_text(&report));
        Ok(report.holds.unwrap_or(true))
    }

    fn check_text(&self, r: &CheckReport) -> String {
        let mut out = format!(
            "{} of H = <{}> (order {}) in {}",
            r.predicate,
            r.subgroup.generators.join(", "),
            r.subgroup.order,
            r.group
        );
        match r.holds {
            Some(holds) => out += &format!(": {holds}\n"),
            None => out.push('\n'),
        }
        if let Some(u) = &r.failing_overgroup {
            out += &format!("failing overgroup U: order {}\n", u.order);
            if self.certificate {
                out += &format!("  {}\n", u.line());
            }
        }
        if let Some(p) = &r.permutizer {
            let label = if r.failing_overgroup.is_some() {
                "permutizer in U"
            } else {
                "permutizer"
            };
            out += &format!("{label}: order {}\n", p.order);
            if self.certificate {
                out += &format!("  {}\n", p.line());
            }
        }
        if let Some(w) = &r.witnesses {
            out += &format!("witnesses: {} cyclic subgroups\n", w.len());
            if self.certificate {
                for x in w {
                    out += &format!("  <{x}>\n");
                }
            }
        }
        if let Some(chain) = &r.chain {
            let orders: Vec<String> = chain.iter().map(|s| s.order.to_string()).collect();
            out += &format!("chain: {}\n", orders.join(" < "));
            if self.certificate {
                for s in chain {
                    out += &format!("  {}\n", s.line());
                }
            }
        }
        if let Some(c) = &r.non_permuting {
            out += &format!("non-permuting cyclic subgroup: order {}\n", c.order);
            if self.certificate {
                out += &format!("  {}\n", c.line());
            }
        }
        out
    }

    fn lattice(&self, spec: &str) -> Result<bool, Failure> {
        let (name, g) = self.group(spec)?;
        let lattice = all_subgroups(&g)?;
        let report = LatticeReport {
            group: name,
            order: g.order(),
            nodes: lattice.nodes().iter().map(Record::of).collect(),
            edges: lattice.covering_edges(),
        };
        self.emit(&report, || {
            let mut out = format!(
                "{} (order {}): {} subgroups, {} covering edges\n",
                report.group,
                report.order,
                report.nodes.len(),
                report.edges.len()
            );
            for (i, n) in report.nodes.iter().enumerate() {
                out += &format!("{i:>4} {}\n", n.line());
            }
            out += "covers:\n";
            for (lower, upper) in &report.edges {
                out += &format!("{lower:>4} < {upper}\n");
            }
            out
        });
        Ok(true)
    }

    fn verify(&self, only: Vec<String>, slow: bool, timings: bool) -> Result<bool, Failure> {
        let results = verify::run(&verify::Options {
            only,
            slow,
            timings,
            budget: self.budget,
        })?;
        if self.json {
            println!("{}", verify::render_json(&results));
        } else {
            print!("{}", verify::render_text(&results));
        }
        Ok(!results.iter().any(|r| r.verdict == verify::Verdict::Fail))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = Run {
        json: cli.json,
        certificate: cli.certificate,
        budget: Budget {
            max_order: cli.max_order,
            max_lattice_nodes: cli.max_lattice_nodes,
            ..Budget::default()
        },
    };
    let outcome = match cli.command {
        Command::Classify { group } => run.classify(&group),
        Command::Check {
            predicate,
            group,
            subgroup,
        } => run.check(predicate, &group, &subgroup),
        Command::Permutizer { group, subgroup } => {
            run.check(Predicate::Permutizer, &group, &subgroup)
        }
        Command::Lattice { group } => run.lattice(&group),
        Command::VerifyPaper {
            only,
            slow,
            timings,
        } => run.verify(only, slow, timings),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
