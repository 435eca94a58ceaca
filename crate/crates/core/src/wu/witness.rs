//! Witness bundles: known Stiefel-Whitney data that certify lower bounds.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{charrank_of_assignment, check_wu, forced_class, Assignment, ClassTerms, DegreeKind};
use crate::error::{Error, Result};
use crate::ring::{manifold_dimension, validate_parameters, Element, Field, RingPresentation};
use crate::steenrod::SqTable;

/// Inclusive range of `n`; `max = None` is unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NRange {
    pub min: u32,
    #[cfg_attr(feature = "serde", serde(default))]
    pub max: Option<u32>,
}

impl NRange {
    pub fn contains(&self, n: u32) -> bool {
        n >= self.min && self.max.is_none_or(|m| n <= m)
    }
}

/// How `k` depends on `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum KPattern {
    Fixed(u32),
    NMinus(u32),
}

impl KPattern {
    pub fn k_for(&self, n: u32) -> Option<u32> {
        match *self {
            KPattern::Fixed(k) => Some(k),
            KPattern::NMinus(offset) => n.checked_sub(offset),
        }
    }
}

/// `w_degree` as a sum of generator products; each term lists labels.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrefixEntry {
    pub degree: u32,
    pub terms: Vec<Vec<u32>>,
}

/// A bundle from the literature, recorded by its nonzero low classes.
///
/// Classes not listed are zero in free degrees and determined by the Wu
/// relation in forced degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WitnessRecord {
    pub id: String,
    pub field: Field,
    pub n: NRange,
    pub k: KPattern,
    pub assignment_prefix: Vec<PrefixEntry>,
    pub claimed_charrank: u32,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WitnessVerification {
    pub id: String,
    pub field: Field,
    pub n: u32,
    pub k: u32,
    pub charrank: u32,
    /// Nonzero classes of the completed assignment.
    pub classes: Vec<ClassTerms>,
}

impl WitnessRecord {
    pub fn k_for(&self, n: u32) -> Option<u32> {
        if !self.n.contains(n) {
            return None;
        }
        self.k.k_for(n)
    }

    pub fn applies(&self, field: Field, n: u32, k: u32) -> bool {
        field == self.field && self.k_for(n) == Some(k)
    }

    fn fail(&self, reason: String) -> Error {
        Error::InconsistentWitness {
            id: self.id.clone(),
            reason,
        }
    }

    fn prefix_element(&self, ring: &RingPresentation, entry: &PrefixEntry) -> Result<Element> {
        let mut out = ring.zero(entry.degree)?;
        for term in &entry.terms {
            let x = ring.product_of_generators(term)?;
            if x.degree() != entry.degree {
                return Err(self.fail(format!(
                    "term {term:?} has degree {}, listed under w_{}",
                    x.degree(),
                    entry.degree
                )));
            }
            out.add_assign(&x)?;
        }
        Ok(out)
    }

    /// The full assignment through degree `len` on `ring`.
    pub fn complete(&self, ring: &RingPresentation, len: u32) -> Result<Assignment> {
        let table = SqTable::new(ring);
        let mut given = BTreeMap::new();
        for entry in &self.assignment_prefix {
            if entry.degree == 0 || entry.degree > len {
                return Err(self.fail(format!(
                    "prefix entry w_{} outside 1..={len}",
                    entry.degree
                )));
            }
            given.insert(entry.degree, self.prefix_element(ring, entry)?);
        }
        let mut a = Assignment::new();
        for t in 1..=len {
            let w = match DegreeKind::of(t) {
                DegreeKind::Forced => {
                    let forced = forced_class(&table, &a, t - 1)?;
                    if let Some(listed) = given.get(&t) {
                        if *listed != forced {
                            return Err(self.fail(format!(
                                "w_{t} is forced to {} by the Wu relation but listed as {}",
                                ring.format_element(&forced),
                                ring.format_element(listed)
                            )));
                        }
                    }
                    forced
                }
                DegreeKind::Free => match given.remove(&t) {
                    Some(w) => w,
                    None => ring.zero(t)?,
                },
            };
            a.push(w)?;
        }
        check_wu(&table, &a).map_err(|e| self.fail(format!("{e}")))?;
        Ok(a)
    }

    /// Completes the witness on `V_k(F^n)` and checks its charrank.
    pub fn verify(&self, n: u32) -> Result<WitnessVerification> {
        let k = self
            .k_for(n)
            .ok_or_else(|| self.fail(format!("n = {n} outside the recorded family")))?;
        validate_parameters(self.field, n, k).map_err(|e| self.fail(format!("{e}")))?;
        let len = (self.claimed_charrank + 1).min(manifold_dimension(self.field, n, k));
        let ring = RingPresentation::build(self.field, n, k, len.max(1))?;
        let a = self.complete(&ring, len)?;
        let charrank = charrank_of_assignment(&ring, &a)?;
        if charrank != self.claimed_charrank {
            return Err(self.fail(format!(
                "charrank on V_{k}({}^{n}) is {charrank}, claimed {}",
                self.field, self.claimed_charrank
            )));
        }
        Ok(WitnessVerification {
            id: self.id.clone(),
            field: self.field,
            n,
            k,
            charrank,
            classes: a.describe(&ring),
        })
    }
}
