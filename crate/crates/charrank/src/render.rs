//! Plain-text rendering of command results.

use std::fmt::Write;

use stiefel_core::wu::{BoundReport, CorollaryOutcome, DegreeKind};

use crate::dump::{RingDump, SqDump};
use crate::table::{RowStatus, TheoremTable};

pub fn ring(d: &RingDump) -> String {
    let mut s = String::new();
    writeln!(s, "V_{}({}^{})  dim {}  truncated at degree {}", d.k, d.field, d.n, d.manifold_dimension, d.max_degree).unwrap();
    let gens: Vec<String> = d
        .generators
        .iter()
        .map(|g| format!("{} (deg {}, square {})", g.name, g.degree, g.square))
        .collect();
    writeln!(s, "generators: {}", gens.join(", ")).unwrap();
    writeln!(
        s,
        "connectivity: H^i = 0 for 0 < i < {}, H^{} = Z/2 (checked through degree {})",
        d.connectivity.first_nonzero_degree, d.connectivity.first_nonzero_degree, d.connectivity.certified_through
    )
    .unwrap();
    writeln!(s, "{:>6}  {:>4}  basis", "degree", "dim").unwrap();
    for deg in &d.degrees {
        writeln!(s, "{:>6}  {:>4}  {}", deg.degree, deg.dim, deg.basis.join(" ")).unwrap();
    }
    s
}

pub fn sq(d: &SqDump) -> String {
    let mut s = String::new();
    writeln!(s, "Steenrod squares on V_{}({}^{}) through degree {}", d.k, d.field, d.n, d.max_degree).unwrap();
    for e in &d.entries {
        let value = if e.value.is_empty() { "0".to_string() } else { e.value.join(" + ") };
        writeln!(s, "Sq^{}({}) = {}", e.i, e.monomial, value).unwrap();
    }
    s
}

pub fn bound(r: &BoundReport) -> String {
    let mut s = String::new();
    writeln!(s, "V_{}({}^{})", r.k, r.field, r.n).unwrap();
    writeln!(s, "lower  {}  (witness: {})", r.lower, r.witness_id.as_deref().unwrap_or("-")).unwrap();
    writeln!(s, "upper  {}{}", r.upper, if r.truncated { "  (degree cap reached)" } else { "" }).unwrap();
    writeln!(s, "exact  {}", if r.exact { "yes" } else { "no" }).unwrap();
    match r.stop_degree {
        Some(d) => writeln!(s, "every branch died by degree {d}").unwrap(),
        None => writeln!(s, "branches survived to the cap, degree {}", r.cap).unwrap(),
    }
    for rule in &r.rules {
        writeln!(s, "rule {} at degree {}: {} candidates pruned", rule.id, rule.degree, rule.pruned).unwrap();
    }
    for a in &r.assumptions {
        writeln!(s, "assumes: {a}").unwrap();
    }
    writeln!(s, "{:>6}  {:<6}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}", "degree", "kind", "in", "wu", "rule", "retired", "live").unwrap();
    for t in &r.trace {
        let kind = match t.kind {
            DegreeKind::Free => "free",
            DegreeKind::Forced => "forced",
        };
        writeln!(
            s,
            "{:>6}  {:<6}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}",
            t.degree, kind, t.incoming, t.pruned_wu, t.pruned_rule, t.retired, t.live
        )
        .unwrap();
    }
    s
}

fn interval(lo: u32, hi: u32) -> String {
    if lo == hi {
        lo.to_string()
    } else {
        format!("[{lo},{hi}]")
    }
}

pub fn theorem_table(t: &TheoremTable) -> String {
    let mut s = String::new();
    writeln!(s, "{:<2} {:>3} {:>3}  {:>9}  {:>9}  {:<10}  source", "F", "n", "k", "expected", "computed", "status").unwrap();
    for r in &t.rows {
        let expected = r
            .expected
            .map(|e| interval(e.expected_lower, e.expected_upper))
            .unwrap_or_else(|| "-".into());
        let status = match r.status {
            RowStatus::Match => "ok",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::NotCovered => "uncovered",
        };
        writeln!(
            s,
            "{:<2} {:>3} {:>3}  {:>9}  {:>9}  {:<10}  {}",
            r.field.symbol(),
            r.n,
            r.k,
            expected,
            interval(r.lower, r.upper),
            status,
            r.expected.map(|e| e.source).unwrap_or("outside the classified range")
        )
        .unwrap();
    }
    writeln!(s, "{} matched, {} mismatched, {} not covered", t.matched, t.mismatched, t.not_covered).unwrap();
    s
}

pub fn corollary(c: &CorollaryOutcome) -> String {
    let mut s = String::new();
    writeln!(s, "corollary {} on V_{}({}^{}): {}", c.which, c.k, c.field, c.n, c.statement).unwrap();
    writeln!(s, "{} assignments checked: {}", c.checked, if c.passed { "pass" } else { "FAIL" }).unwrap();
    if let Some(ce) = &c.counterexample {
        for class in ce {
            writeln!(s, "  w_{} = {}", class.degree, class.terms.join(" + ")).unwrap();
        }
    }
    s
}
