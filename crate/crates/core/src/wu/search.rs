//! Degree-by-degree search over Wu-consistent assignments.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::rules::{AppliedRule, ObstructionRule};
use super::{forced_class, odd_relation_holds, Assignment, Coverage};
use crate::error::{Error, Result};
use crate::gf2::CoordVector;
use crate::steenrod::SqTable;

/// One partial assignment in the search frontier.
///
/// With coverage tracking on, a branch is live only while the classes chosen
/// so far generate all of `H^0..H^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    assignment: Assignment,
    coverage: Option<Coverage>,
}

impl Branch {
    pub fn root(track_coverage: bool) -> Self {
        Branch {
            assignment: Assignment::new(),
            coverage: track_coverage.then(Coverage::new),
        }
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn into_assignment(self) -> Assignment {
        self.assignment
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum DegreeKind {
    /// `w_1` or an even-degree class: every element of `H^t` is tried.
    Free,
    /// Odd degree at least 3: `w_t = w_1 w_{t-1} + Sq^1 w_{t-1}`.
    Forced,
}

impl DegreeKind {
    pub fn of(t: u32) -> Self {
        if t >= 3 && t % 2 == 1 {
            DegreeKind::Forced
        } else {
            DegreeKind::Free
        }
    }
}

/// What happened to the frontier while extending to one degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DegreeTrace {
    pub degree: u32,
    pub kind: DegreeKind,
    /// Branches entering the step.
    pub incoming: u64,
    /// Branches dropped because `Sq^1 w_{t-1} != w_1 w_{t-1}` (odd `t-1`).
    pub pruned_wu: u64,
    /// Candidate classes dropped by obstruction rules.
    pub pruned_rule: u64,
    /// Branches whose coverage failed at this degree (charrank `t-1`).
    pub retired: u64,
    /// Branches leaving the step.
    pub live: u64,
}

pub struct Extension {
    pub live: Vec<Branch>,
    pub trace: DegreeTrace,
    pub applied: Vec<AppliedRule>,
}

fn vanishes_here(rules: &[ObstructionRule], table: &SqTable<'_>, t: u32) -> Vec<&'static str> {
    let ring = table.ring();
    rules
        .iter()
        .filter(|r| r.vanishing_degree(ring.field(), ring.n(), ring.k()) == Some(t))
        .map(|r| r.id)
        .collect()
}

/// Extends every branch (all at degree `d`) to degree `d + 1`.
///
/// Forced degrees get the single class the Wu relation dictates; free
/// degrees branch over all of `H^{d+1}`, after the odd relation on `w_d`
/// is checked. Obstruction rules discard nonzero classes in their degree.
/// When coverage is tracked, branches that stop generating the cohomology
/// are retired and only counted.
pub fn extend_assignments(
    table: &SqTable<'_>,
    rules: &[ObstructionRule],
    branches: Vec<Branch>,
    d: u32,
    guard: usize,
) -> Result<Extension> {
    let ring = table.ring();
    let t = d + 1;
    let kind = DegreeKind::of(t);
    let vanishing = vanishes_here(rules, table, t);
    let dim = ring.dim(t)?;
    let mut trace = DegreeTrace {
        degree: t,
        kind,
        incoming: branches.len() as u64,
        pruned_wu: 0,
        pruned_rule: 0,
        retired: 0,
        live: 0,
    };

    let mut candidates: Vec<Branch> = Vec::new();
    match kind {
        DegreeKind::Forced => {
            for mut b in branches {
                let w = forced_class(table, &b.assignment, d)?;
                if !w.is_zero() && !vanishing.is_empty() {
                    trace.pruned_rule += 1;
                    continue;
                }
                b.assignment.push(w)?;
                candidates.push(b);
            }
        }
        DegreeKind::Free => {
            let choices: u128 = if !vanishing.is_empty() {
                1
            } else {
                1u128.checked_shl(dim as u32).filter(|_| dim < 64).unwrap_or(u128::MAX)
            };
            let total = (branches.len() as u128).saturating_mul(choices);
            if total > guard as u128 {
                return Err(Error::BranchGuard {
                    degree: t,
                    branches: total,
                    guard,
                });
            }
            if !vanishing.is_empty() {
                let all = 1u64.checked_shl(dim as u32).unwrap_or(u64::MAX);
                trace.pruned_rule += (all - 1) * branches.len() as u64;
            }
            for b in branches {
                if d >= 3 && d % 2 == 1 && !odd_relation_holds(table, &b.assignment, d)? {
                    trace.pruned_wu += 1;
                    continue;
                }
                for mask in 0..choices as u64 {
                    let mut coords = CoordVector::zeros(dim);
                    for bit in 0..dim {
                        if mask >> bit & 1 == 1 {
                            coords.set(bit, true);
                        }
                    }
                    let mut child = b.clone();
                    child.assignment.push(ring.element(t, coords)?)?;
                    candidates.push(child);
                }
            }
        }
    }

    let mut live = Vec::with_capacity(candidates.len());
    for mut b in candidates {
        let keep = match b.coverage.as_mut() {
            Some(cov) => cov.extend(ring, &b.assignment)?,
            None => true,
        };
        if keep {
            live.push(b);
        } else {
            trace.retired += 1;
        }
    }
    trace.live = live.len() as u64;

    let applied = if trace.pruned_rule > 0 {
        vanishing
            .iter()
            .map(|id| AppliedRule {
                id: id.to_string(),
                degree: t,
                pruned: trace.pruned_rule,
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(Extension {
        live,
        trace,
        applied,
    })
}

/// Drives [`extend_assignments`] from the empty assignment upward.
pub struct Enumerator<'t, 'r> {
    table: &'t SqTable<'r>,
    rules: Vec<ObstructionRule>,
    guard: usize,
    degree: u32,
    frontier: Vec<Branch>,
    trace: Vec<DegreeTrace>,
    applied: Vec<AppliedRule>,
    best_retired: Option<u32>,
}

impl<'t, 'r> Enumerator<'t, 'r> {
    pub fn new(
        table: &'t SqTable<'r>,
        rules: &[ObstructionRule],
        guard: usize,
        track_coverage: bool,
    ) -> Self {
        Enumerator {
            table,
            rules: rules.to_vec(),
            guard,
            degree: 0,
            frontier: vec![Branch::root(track_coverage)],
            trace: Vec::new(),
            applied: Vec::new(),
            best_retired: None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn frontier(&self) -> &[Branch] {
        &self.frontier
    }

    /// Mutable access for callers that reorder branches between steps.
    pub fn frontier_mut(&mut self) -> &mut [Branch] {
        &mut self.frontier
    }

    pub fn trace(&self) -> &[DegreeTrace] {
        &self.trace
    }

    pub fn applied_rules(&self) -> &[AppliedRule] {
        &self.applied
    }

    /// Largest charrank among retired branches.
    pub fn best_retired(&self) -> Option<u32> {
        self.best_retired
    }

    pub fn step(&mut self) -> Result<&DegreeTrace> {
        let branches = core::mem::take(&mut self.frontier);
        let ext = extend_assignments(self.table, &self.rules, branches, self.degree, self.guard)?;
        if ext.trace.retired > 0 {
            self.best_retired = self.best_retired.max(Some(self.degree));
        }
        self.degree += 1;
        self.frontier = ext.live;
        self.applied.extend(ext.applied);
        self.trace.push(ext.trace);
        Ok(self.trace.last().expect("just pushed"))
    }

    pub fn into_frontier(self) -> Vec<Branch> {
        self.frontier
    }
}

/// Every Wu-consistent, rule-respecting assignment through degree `up_to`,
/// with no coverage pruning.
pub fn enumerate_assignments(
    table: &SqTable<'_>,
    rules: &[ObstructionRule],
    up_to: u32,
    guard: usize,
) -> Result<Vec<Assignment>> {
    let mut e = Enumerator::new(table, rules, guard, false);
    while e.degree() < up_to {
        e.step()?;
    }
    Ok(e.into_frontier().into_iter().map(Branch::into_assignment).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, RingPresentation};
    use crate::wu::{charrank_of_assignment, check_wu};

    #[test]
    fn degree_kinds() {
        use DegreeKind::*;
        let kinds: Vec<_> = (1..=7).map(DegreeKind::of).collect();
        assert_eq!(kinds, [Free, Free, Forced, Free, Forced, Free, Forced]);
    }

    #[test]
    fn so8_forced_third_class() {
        let r = RingPresentation::build(Field::Real, 8, 7, 6).unwrap();
        let t = SqTable::new(&r);
        let mut a = Assignment::new();
        a.push(r.generator_element(1).unwrap()).unwrap();
        a.push(r.product_of_generators(&[1, 1]).unwrap()).unwrap();
        let b = Branch {
            assignment: a,
            coverage: None,
        };
        let ext = extend_assignments(&t, &[], vec![b], 2, 1 << 20).unwrap();
        assert_eq!(ext.live.len(), 1);
        let w3 = ext.live[0].assignment().w(3).unwrap();
        assert_eq!(r.format_element(w3), "a_1a_2");
    }

    #[test]
    fn even_codimension_forces_zero() {
        let r = RingPresentation::build(Field::Real, 6, 4, 6).unwrap();
        let t = SqTable::new(&r);
        let all = enumerate_assignments(&t, &[], 3, 1 << 20).unwrap();
        // w_1 = 0, w_2 in {0, a_2}, w_3 forced
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|a| a.w(3).unwrap().is_zero()));
    }

    #[test]
    fn unitary_w3_vanishes() {
        let r = RingPresentation::build(Field::Complex, 3, 3, 4).unwrap();
        let t = SqTable::new(&r);
        let all = enumerate_assignments(&t, &[], 3, 1 << 20).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|a| a.w(2).unwrap().is_zero() && a.w(3).unwrap().is_zero()));
    }

    #[test]
    fn enumerated_assignments_pass_the_wu_check() {
        let r = RingPresentation::build(Field::Real, 6, 5, 8).unwrap();
        let t = SqTable::new(&r);
        let all = enumerate_assignments(&t, &[], 8, 1 << 20).unwrap();
        assert!(!all.is_empty());
        for a in &all {
            assert_eq!(a.len(), 8);
            check_wu(&t, a).unwrap();
        }
    }

    #[test]
    fn guard_trips_instead_of_truncating() {
        let r = RingPresentation::build(Field::Real, 7, 6, 10).unwrap();
        let t = SqTable::new(&r);
        let err = enumerate_assignments(&t, &[], 10, 16).unwrap_err();
        assert!(matches!(err, Error::BranchGuard { guard: 16, .. }));
    }

    #[test]
    fn milnor_rule_prunes_bottom_class() {
        let r = RingPresentation::build(Field::Real, 8, 2, 8).unwrap();
        let t = SqTable::new(&r);
        let mut e = Enumerator::new(&t, &[ObstructionRule::MILNOR], 1 << 20, true);
        while !e.frontier().is_empty() {
            e.step().unwrap();
        }
        assert_eq!(e.degree(), 6);
        assert_eq!(e.best_retired(), Some(5));
        assert_eq!(e.applied_rules().len(), 1);
        assert_eq!(e.applied_rules()[0].degree, 6);
        assert_eq!(e.applied_rules()[0].pruned, 1);
    }

    #[test]
    fn retired_branches_record_charrank() {
        let r = RingPresentation::build(Field::Real, 8, 7, 6).unwrap();
        let t = SqTable::new(&r);
        let mut e = Enumerator::new(&t, &[], 1 << 20, true);
        e.step().unwrap();
        assert_eq!(e.frontier().len(), 1);
        let a = e.frontier()[0].assignment();
        assert_eq!(charrank_of_assignment(&r, a).unwrap(), 1);
        while !e.frontier().is_empty() {
            e.step().unwrap();
        }
        assert_eq!(e.best_retired(), Some(2));
    }
}
