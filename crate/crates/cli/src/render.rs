use std::fmt::Write as _;

use dombound::{BoundCertificate, Chain, HasseInterval, Partition, SchurExpansion, VerificationReport};
use serde::Serialize;

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn hasse_text(iv: &HasseInterval, n: u32) -> String {
    let mut s = format!(
        "Gamma({n},{}): {} nodes, {} covers\n",
        iv.rank(),
        iv.nodes().len(),
        iv.edge_count()
    );
    for (a, b) in iv.edges() {
        let _ = writeln!(s, "{a} > {b}");
    }
    s
}

pub fn chains_text(iv: &HasseInterval, longest_only: bool, chains: &[Chain]) -> String {
    let kind = if longest_only { "longest chains" } else { "chains" };
    let mut s = format!(
        "{} {kind} from {} to {} (l = {})\n",
        chains.len(),
        iv.top(),
        iv.bottom(),
        iv.longest_length()
    );
    for c in chains {
        let _ = writeln!(s, "[{}] {c}", c.length());
    }
    s
}

#[derive(Serialize)]
struct ChainListing<'a> {
    from: &'a Partition,
    to: &'a Partition,
    rank: u32,
    longest_only: bool,
    longest_length: usize,
    chains: &'a [Chain],
}

pub fn chains_json(iv: &HasseInterval, longest_only: bool, chains: &[Chain]) -> String {
    json(&ChainListing {
        from: iv.top(),
        to: iv.bottom(),
        rank: iv.rank(),
        longest_only,
        longest_length: iv.longest_length(),
        chains,
    })
}

pub fn bound_text(cert: &BoundCertificate) -> String {
    let steps: Vec<String> = cert.per_step.iter().map(u64::to_string).collect();
    format!(
        "lambda    {}\nn         {}\nl(1,lam)  {}\nB         {}\nfloor     {}\nchain     {}\nper_step  {}\n",
        cert.lambda,
        cert.n,
        cert.longest_length,
        cert.bound_b,
        cert.floor_bound,
        cert.best_chain,
        steps.join(" ")
    )
}

#[derive(Serialize)]
struct ExpansionListing<'a> {
    partition: &'a [u32],
    expansion: &'a SchurExpansion,
    weight: i64,
}

pub fn expansion_json(lambda: &Partition, e: &SchurExpansion, weight: i64) -> String {
    json(&ExpansionListing {
        partition: lambda.parts(),
        expansion: e,
        weight,
    })
}

pub fn report_text(report: &VerificationReport) -> String {
    let mut s = format!(
        "verify {} n={} r={}: {} records\n",
        report.scope.mode.name(),
        report.scope.n,
        report.scope.rank,
        report.records.len()
    );
    for r in &report.records {
        let mut line = match &r.mu {
            Some(mu) => format!("{} -> {}", r.lambda, mu),
            None => r.lambda.to_string(),
        };
        let _ = write!(line, "  W={}", r.weight);
        if let Some(b) = r.bound {
            let _ = write!(line, " B={b}");
        }
        if let Some(f) = r.floor {
            let _ = write!(line, " floor={f}");
        }
        if let Some(q) = r.required {
            let _ = write!(line, " required={q}");
        }
        if let Some(id) = r.identity_holds {
            let _ = write!(line, " identity={id}");
        }
        if let Some(t) = r.telescoping_matches {
            let _ = write!(line, " telescoping={t}");
        }
        let _ = writeln!(s, "{} {line}", if r.pass { "ok  " } else { "FAIL" });
    }
    let _ = writeln!(s, "all_pass: {}", report.all_pass);
    s
}

/// Report JSON; `elapsed_ms` is null unless timing is requested so that
/// repeated runs are byte-identical.
pub fn report_json(report: &VerificationReport, timing: bool) -> String {
    #[derive(Serialize)]
    struct Shown<'a> {
        scope: &'a dombound::Scope,
        records: &'a [dombound::Record],
        all_pass: bool,
        elapsed_ms: Option<u64>,
    }
    json(&Shown {
        scope: &report.scope,
        records: &report.records,
        all_pass: report.all_pass,
        elapsed_ms: timing.then_some(report.elapsed_ms),
    })
}
