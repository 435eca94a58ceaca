//! The closed-form upper characteristic rank table and its comparison
//! against the engine.
//!
//! Expected values come from the case analysis below, never from stored
//! fixtures. Where only an upper bound is known (real `n-k` of 4 with
//! `k > 2`, and `n-k = 8`), the expected lower end is the connectivity
//! bound `n-k-1` and the row expects an interval.

use rayon::prelude::*;
use serde::Serialize;
use stiefel_core::ring::{connectivity_bound, validate_parameters};
use stiefel_core::wu::{ucharrank_bound, BoundOptions, BoundReport, ObstructionRule, WitnessRecord};
use stiefel_core::Field;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub field: Field,
    pub n: u32,
    pub k: u32,
    pub expected_lower: u32,
    pub expected_upper: u32,
    pub expected_exact: bool,
    pub source: &'static str,
}

/// Expected bounds for `V_k(F^n)`, or `None` outside the classified range
/// (only `SO(3)` among valid parameters).
pub fn theorem_row(field: Field, n: u32, k: u32) -> Option<TheoremRow> {
    validate_parameters(field, n, k).ok()?;
    let m = n - k;
    let exact = |v, source| (v, v, true, source);
    let (lo, hi, ex, source) = match field {
        Field::Real => match m {
            1 if n >= 4 => exact(2, "real, n-k = 1, n >= 4"),
            1 => return None,
            2 => exact(2, "real, n-k = 2"),
            4 if k == 2 => exact(4, "real, (n,k) = (6,2)"),
            4 => (connectivity_bound(field, n, k), 4, false, "real, n-k = 4, k > 2: at most 4"),
            8 => (connectivity_bound(field, n, k), 8, false, "real, n-k = 8: at most 8"),
            _ => exact(m - 1, "real, n-k not in {1,2,4,8}"),
        },
        Field::Complex if k == n => exact(2, "complex, k = n"),
        Field::Complex => exact(2 * m, "complex, k < n"),
        Field::Quaternion => exact(4 * m + 2, "quaternionic"),
    };
    Some(TheoremRow {
        field,
        n,
        k,
        expected_lower: lo,
        expected_upper: hi,
        expected_exact: ex,
        source,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Match,
    Mismatch,
    NotCovered,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub field: Field,
    pub n: u32,
    pub k: u32,
    pub expected: Option<TheoremRow>,
    pub lower: u32,
    pub upper: u32,
    pub exact: bool,
    pub witness_id: Option<String>,
    pub status: RowStatus,
}

impl TableRow {
    pub fn compare(expected: Option<TheoremRow>, report: &BoundReport) -> Self {
        let status = match &expected {
            None => RowStatus::NotCovered,
            Some(e)
                if e.expected_lower == report.lower
                    && e.expected_upper == report.upper
                    && e.expected_exact == report.exact =>
            {
                RowStatus::Match
            }
            Some(_) => RowStatus::Mismatch,
        };
        TableRow {
            field: report.field,
            n: report.n,
            k: report.k,
            expected,
            lower: report.lower,
            upper: report.upper,
            exact: report.exact,
            witness_id: report.witness_id.clone(),
            status,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremTable {
    pub rows: Vec<TableRow>,
    pub matched: usize,
    pub mismatched: usize,
    pub not_covered: usize,
    pub all_match: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct TableLimits {
    pub max_n_real: u32,
    pub max_n_complex: u32,
    pub max_n_quaternion: u32,
}

impl Default for TableLimits {
    fn default() -> Self {
        TableLimits {
            max_n_real: 12,
            max_n_complex: 10,
            max_n_quaternion: 6,
        }
    }
}

/// Every valid `(field, n, k)` with `n` up to the field's limit, in order.
pub fn cells(fields: &[Field], limits: TableLimits) -> Vec<(Field, u32, u32)> {
    let mut out = Vec::new();
    for &field in fields {
        let max_n = match field {
            Field::Real => limits.max_n_real,
            Field::Complex => limits.max_n_complex,
            Field::Quaternion => limits.max_n_quaternion,
        };
        for n in 2..=max_n {
            for k in 2..=n {
                if validate_parameters(field, n, k).is_ok() {
                    out.push((field, n, k));
                }
            }
        }
    }
    out
}

/// Computes every cell in parallel; rows come back in cell order.
pub fn theorem_table(
    fields: &[Field],
    limits: TableLimits,
    milnor: bool,
    witnesses: &[WitnessRecord],
    opts: &BoundOptions,
) -> Result<TheoremTable, CliError> {
    let rules: &[ObstructionRule] = if milnor { &[ObstructionRule::MILNOR] } else { &[] };
    let rows = cells(fields, limits)
        .into_par_iter()
        .map(|(field, n, k)| {
            let report = ucharrank_bound(field, n, k, rules, witnesses, opts)?;
            Ok(TableRow::compare(theorem_row(field, n, k), &report))
        })
        .collect::<Result<Vec<_>, stiefel_core::Error>>()?;
    let count = |s| rows.iter().filter(|r| r.status == s).count();
    let (matched, mismatched, not_covered) = (
        count(RowStatus::Match),
        count(RowStatus::Mismatch),
        count(RowStatus::NotCovered),
    );
    Ok(TheoremTable {
        all_match: mismatched == 0,
        rows,
        matched,
        mismatched,
        not_covered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_rows() {
        let r = theorem_row(Field::Real, 9, 2).unwrap();
        assert_eq!((r.expected_lower, r.expected_upper, r.expected_exact), (6, 6, true));
        let r = theorem_row(Field::Real, 7, 3).unwrap();
        assert_eq!((r.expected_lower, r.expected_upper, r.expected_exact), (3, 4, false));
        let r = theorem_row(Field::Real, 12, 4).unwrap();
        assert_eq!((r.expected_lower, r.expected_upper), (7, 8));
        assert_eq!(theorem_row(Field::Real, 6, 2).unwrap().expected_upper, 4);
        assert_eq!(theorem_row(Field::Complex, 5, 5).unwrap().expected_upper, 2);
        assert_eq!(theorem_row(Field::Complex, 6, 3).unwrap().expected_upper, 6);
        assert_eq!(theorem_row(Field::Quaternion, 2, 2).unwrap().expected_upper, 2);
        assert_eq!(theorem_row(Field::Quaternion, 4, 2).unwrap().expected_upper, 10);
        assert!(theorem_row(Field::Real, 3, 2).is_none());
        assert!(theorem_row(Field::Real, 4, 4).is_none());
    }

    #[test]
    fn cell_enumeration() {
        let limits = TableLimits {
            max_n_real: 4,
            max_n_complex: 3,
            max_n_quaternion: 2,
        };
        assert_eq!(
            cells(&Field::ALL, limits),
            [
                (Field::Real, 3, 2),
                (Field::Real, 4, 2),
                (Field::Real, 4, 3),
                (Field::Complex, 2, 2),
                (Field::Complex, 3, 2),
                (Field::Complex, 3, 3),
                (Field::Quaternion, 2, 2),
            ]
        );
    }
}
