//! Lower and upper bounds on the upper characteristic rank of `V_k(F^n)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::rules::{AppliedRule, ObstructionRule};
use super::search::{Branch, DegreeTrace, Enumerator};
use super::witness::WitnessRecord;
use super::{charrank_of_assignment, Assignment};
use crate::error::{Error, Result};
use crate::ring::{connectivity_bound, manifold_dimension, validate_parameters, Field, RingPresentation};
use crate::steenrod::SqTable;

/// Highest degree explored unless configured otherwise.
pub const DEFAULT_CAP: u32 = 24;
/// Largest frontier allowed before the search gives up.
pub const DEFAULT_GUARD: usize = 1 << 20;

/// Identifier used when the connectivity bound is the best lower bound.
pub const TRIVIAL_WITNESS: &str = "trivial-bundle";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundOptions {
    /// Degree limit; the effective cap is also bounded by `dim V_k(F^n)`.
    pub cap: Option<u32>,
    pub guard: usize,
    pub use_witnesses: bool,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            cap: None,
            guard: DEFAULT_GUARD,
            use_witnesses: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundReport {
    pub field: Field,
    pub n: u32,
    pub k: u32,
    pub lower: u32,
    pub upper: u32,
    pub exact: bool,
    pub witness_id: Option<String>,
    pub rules: Vec<AppliedRule>,
    pub assumptions: Vec<String>,
    pub trace: Vec<DegreeTrace>,
    /// Degree at which the last live branch died, if the search ran dry.
    pub stop_degree: Option<u32>,
    /// Effective degree cap.
    pub cap: u32,
    /// Live branches survived a cap below the manifold dimension, so `upper`
    /// is the cap rather than a proven bound.
    pub truncated: bool,
}

pub fn ucharrank_bound(
    field: Field,
    n: u32,
    k: u32,
    rules: &[ObstructionRule],
    witnesses: &[WitnessRecord],
    opts: &BoundOptions,
) -> Result<BoundReport> {
    ucharrank_bound_with(field, n, k, rules, witnesses, opts, |_| {})
}

/// [`ucharrank_bound`], calling `reorder` on the frontier before each step.
pub fn ucharrank_bound_with(
    field: Field,
    n: u32,
    k: u32,
    rules: &[ObstructionRule],
    witnesses: &[WitnessRecord],
    opts: &BoundOptions,
    mut reorder: impl FnMut(&mut [Branch]),
) -> Result<BoundReport> {
    validate_parameters(field, n, k)?;
    let dimension = manifold_dimension(field, n, k);
    let cap = opts.cap.unwrap_or(DEFAULT_CAP).min(dimension).max(1);
    let ring = RingPresentation::build(field, n, k, cap)?;
    let table = SqTable::new(&ring);

    let mut search = Enumerator::new(&table, rules, opts.guard, true);
    let mut stop_degree = None;
    while search.degree() < cap {
        reorder(search.frontier_mut());
        search.step()?;
        if search.frontier().is_empty() {
            stop_degree = Some(search.degree());
            break;
        }
    }
    let survivors = !search.frontier().is_empty();
    let upper = if survivors {
        cap
    } else {
        search.best_retired().unwrap_or(0)
    };
    let truncated = survivors && cap < dimension;

    // trivial bundle: all classes vanish
    let trivial_len = (connectivity_bound(field, n, k) + 1).min(cap);
    let trivial = charrank_of_assignment(&ring, &Assignment::trivial(&ring, trivial_len)?)?;
    let mut lower = trivial;
    let mut witness_id = TRIVIAL_WITNESS.to_string();
    if opts.use_witnesses {
        for w in witnesses.iter().filter(|w| w.applies(field, n, k)) {
            let verified = w.verify(n)?;
            if verified.charrank > upper && !truncated {
                return Err(Error::InconsistentWitness {
                    id: w.id.clone(),
                    reason: format!(
                        "claims charrank {} above the enumerated upper bound {upper}",
                        verified.charrank
                    ),
                });
            }
            if verified.charrank > lower {
                lower = verified.charrank;
                witness_id = w.id.clone();
            }
        }
    }

    let mut assumptions = Vec::new();
    assumptions.push(String::from(
        "only the Sq^1 instances of the Wu formula are enforced; upper bounds are necessary conditions, not realizations",
    ));
    if field != Field::Real {
        assumptions.push(String::from(
            "Sq^1 acts as zero on complex and quaternionic generators (torsion-free integral cohomology)",
        ));
    }
    for rule in rules {
        if rule.vanishing_degree(field, n, k).is_some() {
            assumptions.push(rule.statement.to_string());
        }
    }

    let mut applied: Vec<AppliedRule> = search.applied_rules().to_vec();
    applied.sort_by(|a, b| (&a.id, a.degree).cmp(&(&b.id, b.degree)));

    Ok(BoundReport {
        field,
        n,
        k,
        lower,
        upper,
        exact: lower == upper && !truncated,
        witness_id: Some(witness_id),
        rules: applied,
        assumptions,
        trace: search.trace().to_vec(),
        stop_degree,
        cap,
        truncated,
    })
}
