//! Vanishing statements checked by exhausting the Wu-consistent assignments.

use alloc::string::String;
use alloc::vec::Vec;

use super::rules::ObstructionRule;
use super::search::enumerate_assignments;
use super::{Assignment, ClassTerms};
use crate::error::{Error, Result};
use crate::ring::{validate_parameters, Element, Field, RingPresentation};
use crate::steenrod::SqTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corollary {
    /// `w_{n-k} = 0` on `V_k(R^n)` when `n-k` is not 1, 2, 4 or 8.
    BottomClassVanishes = 1,
    /// On `SO(n)`, `n >= 4`, a non-orientable bundle has `w_3` in `{0, a_1^3}`.
    OrthogonalThirdClass = 2,
    /// `w_{n-k+1} = 0` on `V_k(R^n)` when `n-k` is even.
    EvenCodimension = 3,
    /// `w_3 = 0` on `U(n)`.
    UnitaryThirdClass = 4,
}

impl Corollary {
    pub fn from_index(which: u8) -> Option<Self> {
        match which {
            1 => Some(Corollary::BottomClassVanishes),
            2 => Some(Corollary::OrthogonalThirdClass),
            3 => Some(Corollary::EvenCodimension),
            4 => Some(Corollary::UnitaryThirdClass),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn statement(self) -> &'static str {
        match self {
            Corollary::BottomClassVanishes => "w_{n-k} = 0 for every bundle on V_k(R^n), n-k not in {1,2,4,8}",
            Corollary::OrthogonalThirdClass => "w_3 is 0 or a_1^3 for every non-orientable bundle on SO(n), n >= 4",
            Corollary::EvenCodimension => "w_{n-k+1} = 0 for every bundle on V_k(R^n), n-k even",
            Corollary::UnitaryThirdClass => "w_3 = 0 for every bundle on U(n)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CorollaryOutcome {
    pub which: u8,
    pub statement: String,
    pub field: Field,
    pub n: u32,
    pub k: u32,
    pub passed: bool,
    /// Assignments the statement was tested on.
    pub checked: u64,
    pub counterexample: Option<Vec<ClassTerms>>,
}

/// Exhausts the Wu-consistent assignments and tests the corollary on each.
///
/// The bottom-class statement runs with the Milnor rule; the others use the
/// Wu relation alone.
pub fn check_corollary(which: Corollary, field: Field, n: u32, k: u32, guard: usize) -> Result<CorollaryOutcome> {
    validate_parameters(field, n, k)?;
    let bad = |reason| Err(Error::CorollaryParameters {
        which: which.index(),
        reason,
    });
    let m = n - k;
    let (degree, rules): (u32, &[ObstructionRule]) = match which {
        Corollary::BottomClassVanishes => {
            if field != Field::Real {
                return bad("requires a real Stiefel manifold");
            }
            if matches!(m, 1 | 2 | 4 | 8) {
                return bad("n-k must avoid 1, 2, 4 and 8");
            }
            (m, &[ObstructionRule::MILNOR])
        }
        Corollary::OrthogonalThirdClass => {
            if field != Field::Real || m != 1 || n < 4 {
                return bad("requires SO(n) = V_{n-1}(R^n) with n >= 4");
            }
            (3, &[])
        }
        Corollary::EvenCodimension => {
            if field != Field::Real || !m.is_multiple_of(2) {
                return bad("requires a real Stiefel manifold with n-k even");
            }
            (m + 1, &[])
        }
        Corollary::UnitaryThirdClass => {
            if field != Field::Complex || k != n {
                return bad("requires U(n) = V_n(C^n)");
            }
            (3, &[])
        }
    };

    let ring = RingPresentation::build(field, n, k, degree)?;
    let table = SqTable::new(&ring);
    let all = enumerate_assignments(&table, rules, degree, guard)?;

    let holds = |a: &Assignment| -> Result<bool> {
        let w = |j| a.w(j).expect("enumerated through degree");
        Ok(match which {
            Corollary::BottomClassVanishes | Corollary::EvenCodimension | Corollary::UnitaryThirdClass => {
                w(degree).is_zero()
            }
            Corollary::OrthogonalThirdClass => {
                // only non-orientable bundles: w_1 = a_1
                if w(1).is_zero() {
                    true
                } else {
                    let cube: Element = ring.product_of_generators(&[1, 1, 1])?;
                    w(3).is_zero() || *w(3) == cube
                }
            }
        })
    };

    let mut counterexample = None;
    for a in &all {
        if !holds(a)? {
            counterexample = Some(a.describe(&ring));
            break;
        }
    }
    Ok(CorollaryOutcome {
        which: which.index(),
        statement: String::from(which.statement()),
        field,
        n,
        k,
        passed: counterexample.is_none(),
        checked: all.len() as u64,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wu::DEFAULT_GUARD;

    #[test]
    fn examples_pass() {
        let c = check_corollary(Corollary::OrthogonalThirdClass, Field::Real, 8, 7, DEFAULT_GUARD).unwrap();
        assert!(c.passed);
        assert_eq!(c.checked, 4);
        let c = check_corollary(Corollary::EvenCodimension, Field::Real, 10, 4, DEFAULT_GUARD).unwrap();
        assert!(c.passed);
        let c = check_corollary(Corollary::UnitaryThirdClass, Field::Complex, 4, 4, DEFAULT_GUARD).unwrap();
        assert!(c.passed);
        let c = check_corollary(Corollary::BottomClassVanishes, Field::Real, 9, 2, DEFAULT_GUARD).unwrap();
        assert!(c.passed);
    }

    #[test]
    fn parameter_checks() {
        for (which, field, n, k) in [
            (Corollary::BottomClassVanishes, Field::Real, 10, 2),
            (Corollary::BottomClassVanishes, Field::Complex, 9, 2),
            (Corollary::OrthogonalThirdClass, Field::Real, 8, 6),
            (Corollary::EvenCodimension, Field::Real, 9, 2),
            (Corollary::UnitaryThirdClass, Field::Complex, 5, 4),
        ] {
            assert!(matches!(
                check_corollary(which, field, n, k, DEFAULT_GUARD),
                Err(Error::CorollaryParameters { .. })
            ));
        }
        assert!(Corollary::from_index(5).is_none());
        assert_eq!(Corollary::from_index(3).unwrap().index(), 3);
    }

    #[test]
    fn a_false_statement_yields_a_counterexample() {
        // w_2 = a_2 exists on V_{n-2}(R^n): the "bottom class vanishes" pattern
        // fails there, which is why n-k = 2 is excluded.
        let ring = RingPresentation::build(Field::Real, 6, 4, 2).unwrap();
        let table = SqTable::new(&ring);
        let all = enumerate_assignments(&table, &[], 2, DEFAULT_GUARD).unwrap();
        assert!(all.iter().any(|a| !a.w(2).unwrap().is_zero()));
    }
}
