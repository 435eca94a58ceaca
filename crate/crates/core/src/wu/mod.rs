//! Stiefel-Whitney assignments constrained by the `Sq^1` Wu relation, and
//! the characteristic rank bounds they imply.
//!
//! For any real vector bundle, `Sq^1(w_j) = w_1 w_j + (j+1) w_{j+1}`. For
//! even `j` this determines `w_{j+1}`; for odd `j` it reads
//! `Sq^1(w_j) = w_1 w_j`. The free choices are therefore `w_1` and the
//! even-degree classes. An assignment that obeys these relations is a
//! candidate; nothing here claims a candidate is realized by a bundle, so
//! enumeration yields upper bounds and registry witnesses yield lower bounds.

mod bound;
mod corollary;
mod rules;
mod search;
mod witness;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use bound::{ucharrank_bound, ucharrank_bound_with, BoundOptions, BoundReport, DEFAULT_CAP, DEFAULT_GUARD};
pub use corollary::{check_corollary, Corollary, CorollaryOutcome};
pub use rules::{AppliedRule, ObstructionRule};
pub use search::{
    enumerate_assignments, extend_assignments, Branch, DegreeKind, DegreeTrace, Enumerator, Extension,
};
pub use witness::{KPattern, NRange, PrefixEntry, WitnessRecord, WitnessVerification};

use crate::error::{Error, Result};
use crate::gf2::Span;
use crate::ring::{Element, RingPresentation};
use crate::steenrod::SqTable;

/// A class written out as its basis terms, e.g. `w_3 = a_1a_2 + a_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClassTerms {
    pub degree: u32,
    pub terms: Vec<String>,
}

/// Candidate classes `w_1, ..., w_len` (with `w_0 = 1` implicit).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Assignment {
    classes: Vec<Element>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    /// `classes[j - 1]` must have degree `j`.
    pub fn from_classes(classes: Vec<Element>) -> Result<Self> {
        for (i, c) in classes.iter().enumerate() {
            let j = i as u32 + 1;
            if c.degree() != j {
                return Err(Error::LengthMismatch {
                    expected: j as usize,
                    found: c.degree() as usize,
                });
            }
        }
        Ok(Assignment { classes })
    }

    /// The all-zero assignment through degree `len`: the trivial bundle.
    pub fn trivial(ring: &RingPresentation, len: u32) -> Result<Self> {
        let classes = (1..=len).map(|j| ring.zero(j)).collect::<Result<_>>()?;
        Ok(Assignment { classes })
    }

    /// Highest assigned degree.
    pub fn len(&self) -> u32 {
        self.classes.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `w_j` for `1 <= j <= len`.
    pub fn w(&self, j: u32) -> Option<&Element> {
        j.checked_sub(1).and_then(|i| self.classes.get(i as usize))
    }

    pub fn classes(&self) -> &[Element] {
        &self.classes
    }

    pub fn push(&mut self, class: Element) -> Result<()> {
        let expected = self.len() + 1;
        if class.degree() != expected {
            return Err(Error::LengthMismatch {
                expected: expected as usize,
                found: class.degree() as usize,
            });
        }
        self.classes.push(class);
        Ok(())
    }

    /// The nonzero classes, formatted.
    pub fn describe(&self, ring: &RingPresentation) -> Vec<ClassTerms> {
        self.classes
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| ClassTerms {
                degree: c.degree(),
                terms: ring.format_terms(c),
            })
            .collect()
    }
}

/// `w_1 w_j + Sq^1(w_j)`, the value the Wu relation forces on `w_{j+1}` for even `j`.
pub fn forced_class(table: &SqTable<'_>, a: &Assignment, j: u32) -> Result<Element> {
    let ring = table.ring();
    let wj = a.w(j).expect("w_j assigned");
    let w1 = a.w(1).expect("w_1 assigned");
    let mut out = ring.multiply(w1, wj)?;
    out.add_assign(&table.sq(1, wj)?)?;
    Ok(out)
}

/// For odd `j`, whether `Sq^1(w_j) = w_1 w_j`.
pub fn odd_relation_holds(table: &SqTable<'_>, a: &Assignment, j: u32) -> Result<bool> {
    let ring = table.ring();
    let wj = a.w(j).expect("w_j assigned");
    let w1 = a.w(1).expect("w_1 assigned");
    Ok(table.sq(1, wj)? == ring.multiply(w1, wj)?)
}

/// Checks every `Sq^1` Wu relation that fits inside the assignment.
pub fn check_wu(table: &SqTable<'_>, a: &Assignment) -> Result<()> {
    for j in 2..a.len() {
        let ok = if j % 2 == 0 {
            &forced_class(table, a, j)? == a.w(j + 1).expect("j < len")
        } else {
            odd_relation_holds(table, a, j)?
        };
        if !ok {
            return Err(Error::WuViolation { degree: j + 1 });
        }
    }
    Ok(())
}

/// Degree-by-degree spans of the subalgebra generated by the `w_j`.
///
/// `spans[t]` is spanned by `w_i * spans[t - i]` for `1 <= i <= t`, which
/// covers every monomial in the `w`'s of degree `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    spans: Vec<Span>,
}

impl Coverage {
    pub fn new() -> Self {
        let mut h0 = Span::new(1);
        h0.insert(&crate::gf2::CoordVector::unit(1, 0))
            .expect("length 1");
        Coverage { spans: vec![h0] }
    }

    /// Degree of the last span computed.
    pub fn degree(&self) -> u32 {
        self.spans.len() as u32 - 1
    }

    pub fn span(&self, t: u32) -> Option<&Span> {
        self.spans.get(t as usize)
    }

    /// Computes the next degree's span from `w_1..w_t`; returns whether it fills `H^t`.
    pub fn extend(&mut self, ring: &RingPresentation, a: &Assignment) -> Result<bool> {
        let t = self.degree() + 1;
        let mut span = Span::new(ring.dim(t)?);
        for i in 1..=t {
            let wi = a.w(i).expect("assignment reaches degree t");
            if wi.is_zero() {
                continue;
            }
            for row in self.spans[(t - i) as usize].rows() {
                if span.is_full() {
                    break;
                }
                let lower = ring.element(t - i, row.clone())?;
                span.insert(ring.multiply(wi, &lower)?.coords())?;
            }
        }
        let full = span.is_full();
        self.spans.push(span);
        Ok(full)
    }
}

impl Default for Coverage {
    fn default() -> Self {
        Coverage::new()
    }
}

/// Whether every class in degrees `0..=d` is a polynomial in `w_1..w_d`.
pub fn coverage_prefix(ring: &RingPresentation, a: &Assignment, d: u32) -> Result<bool> {
    if d > a.len() {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            max_degree: a.len(),
        });
    }
    let mut cov = Coverage::new();
    for _ in 1..=d {
        if !cov.extend(ring, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest `d <= a.len()` with full coverage through degree `d`.
pub fn charrank_of_assignment(ring: &RingPresentation, a: &Assignment) -> Result<u32> {
    let mut cov = Coverage::new();
    for t in 1..=a.len() {
        if !cov.extend(ring, a)? {
            return Ok(t - 1);
        }
    }
    Ok(a.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn assignment(ring: &RingPresentation, len: u32, entries: &[(u32, &[u32])]) -> Assignment {
        let mut a = Assignment::trivial(ring, len).unwrap();
        for &(j, labels) in entries {
            a.classes[j as usize - 1] = ring.product_of_generators(labels).unwrap();
        }
        a
    }

    #[test]
    fn trivial_assignment_covers_until_first_generator() {
        let r = RingPresentation::build(Field::Real, 7, 3, 8).unwrap();
        let a = Assignment::trivial(&r, 8).unwrap();
        assert!(coverage_prefix(&r, &a, 0).unwrap());
        assert!(coverage_prefix(&r, &a, 3).unwrap());
        assert!(!coverage_prefix(&r, &a, 4).unwrap());
        assert_eq!(charrank_of_assignment(&r, &a).unwrap(), 3);
        assert!(coverage_prefix(&r, &a, 9).is_err());
    }

    #[test]
    fn line_bundle_on_so8() {
        let r = RingPresentation::build(Field::Real, 8, 7, 6).unwrap();
        let a = assignment(&r, 4, &[(1, &[1])]);
        assert!(coverage_prefix(&r, &a, 2).unwrap());
        assert!(!coverage_prefix(&r, &a, 3).unwrap());
        assert_eq!(charrank_of_assignment(&r, &a).unwrap(), 2);
    }

    #[test]
    fn charrank_examples() {
        let r = RingPresentation::build(Field::Complex, 6, 3, 10).unwrap();
        assert_eq!(
            charrank_of_assignment(&r, &Assignment::trivial(&r, 10).unwrap()).unwrap(),
            6
        );
        let r = RingPresentation::build(Field::Real, 6, 2, 9).unwrap();
        let a = assignment(&r, 6, &[(4, &[4])]);
        assert_eq!(charrank_of_assignment(&r, &a).unwrap(), 4);
    }

    #[test]
    fn forced_classes() {
        let so8 = RingPresentation::build(Field::Real, 8, 7, 6).unwrap();
        let t = SqTable::new(&so8);
        let a = assignment(&so8, 2, &[(1, &[1]), (2, &[1, 1])]);
        let w3 = forced_class(&t, &a, 2).unwrap();
        assert_eq!(w3, so8.product_of_generators(&[1, 1, 1]).unwrap());
        assert_eq!(so8.format_element(&w3), "a_1a_2");

        let r = RingPresentation::build(Field::Real, 6, 4, 6).unwrap();
        let t = SqTable::new(&r);
        let a = assignment(&r, 2, &[(2, &[2])]);
        assert!(forced_class(&t, &a, 2).unwrap().is_zero());

        let u3 = RingPresentation::build(Field::Complex, 3, 3, 4).unwrap();
        let t = SqTable::new(&u3);
        let a = assignment(&u3, 2, &[(1, &[1])]);
        assert!(forced_class(&t, &a, 2).unwrap().is_zero());
    }

    #[test]
    fn wu_check_flags_wrong_odd_class() {
        let so8 = RingPresentation::build(Field::Real, 8, 7, 6).unwrap();
        let t = SqTable::new(&so8);
        let good = assignment(&so8, 3, &[(1, &[1]), (2, &[2]), (3, &[1, 2])]);
        assert!(check_wu(&t, &good).is_ok());
        let bad = assignment(&so8, 3, &[(1, &[1]), (2, &[2]), (3, &[3])]);
        assert_eq!(check_wu(&t, &bad), Err(Error::WuViolation { degree: 3 }));
    }

    #[test]
    fn assignment_degrees_are_checked() {
        let r = RingPresentation::build(Field::Real, 6, 3, 6).unwrap();
        assert!(Assignment::from_classes(vec![r.zero(2).unwrap()]).is_err());
        let mut a = Assignment::new();
        assert!(a.push(r.zero(2).unwrap()).is_err());
        a.push(r.zero(1).unwrap()).unwrap();
        assert_eq!(a.len(), 1);
    }
}
