//! Dense bit-packed linear algebra over GF(2).
//!
//! Coordinates of a homogeneous class live in a [`CoordVector`]; the
//! subspace covered by products of Stiefel-Whitney classes lives in a
//! [`Span`], kept in canonical reduced row echelon form so two spans over
//! the same vector set compare equal row for row.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2) with a fixed number of slots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordVector {
    len: usize,
    words: Vec<u64>,
}

impl CoordVector {
    pub fn zeros(len: usize) -> Self {
        CoordVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The `index`-th standard basis vector.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "coordinate {index} out of range {}", self.len);
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "coordinate {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "coordinate {index} out of range {}", self.len);
        self.words[index / WORD_BITS] ^= 1u64 << (index % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set coordinates in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    /// `self += other` over GF(2).
    pub fn add_assign(&mut self, other: &CoordVector) -> Result<()> {
        self.check_len(other.len)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn sum(&self, other: &CoordVector) -> Result<CoordVector> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    fn check_len(&self, other: usize) -> Result<()> {
        if self.len != other {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// A subspace of GF(2)^n in canonical reduced row echelon form.
///
/// Rows are nonzero with strictly increasing pivots (lowest set bit), and
/// every pivot column is zero in all other rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Span {
    ambient_length: usize,
    rows: Vec<CoordVector>,
}

impl Span {
    pub fn new(ambient_length: usize) -> Self {
        Span {
            ambient_length,
            rows: Vec::new(),
        }
    }

    pub fn ambient_length(&self) -> usize {
        self.ambient_length
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[CoordVector] {
        &self.rows
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_length
    }

    fn check_len(&self, v: &CoordVector) -> Result<()> {
        if v.len() != self.ambient_length {
            return Err(Error::LengthMismatch {
                expected: self.ambient_length,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn reduce(&self, v: &mut CoordVector) {
        for row in &self.rows {
            let pivot = row.first_one().expect("echelon rows are nonzero");
            if v.get(pivot) {
                v.add_assign(row).expect("lengths checked by caller");
            }
        }
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &CoordVector) -> Result<bool> {
        self.check_len(v)?;
        let mut residue = v.clone();
        self.reduce(&mut residue);
        Ok(residue.is_zero())
    }

    /// Adds `v` in place; returns whether the rank grew.
    pub fn insert(&mut self, v: &CoordVector) -> Result<bool> {
        self.check_len(v)?;
        if self.is_full() {
            return Ok(false);
        }
        let mut residue = v.clone();
        self.reduce(&mut residue);
        let Some(pivot) = residue.first_one() else {
            return Ok(false);
        };
        for row in &mut self.rows {
            if row.get(pivot) {
                row.add_assign(&residue)?;
            }
        }
        let at = self
            .rows
            .partition_point(|row| row.first_one().expect("nonzero row") < pivot);
        self.rows.insert(at, residue);
        Ok(true)
    }

    /// The span of `self` together with `v`.
    pub fn add_vector(&self, v: &CoordVector) -> Result<Span> {
        let mut out = self.clone();
        out.insert(v)?;
        Ok(out)
    }
}

impl fmt::Debug for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Span")
            .field("ambient_length", &self.ambient_length)
            .field("rows", &self.rows)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(bits: &[u8]) -> CoordVector {
        CoordVector::from_bits(&bits.iter().map(|&b| b == 1).collect::<Vec<_>>())
    }

    fn span_of(len: usize, vs: &[CoordVector]) -> Span {
        let mut s = Span::new(len);
        for x in vs {
            s.insert(x).unwrap();
        }
        s
    }

    #[test]
    fn zero_vector_adds_nothing() {
        let s = Span::new(3).add_vector(&CoordVector::zeros(3)).unwrap();
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn unit_vector_adds_rank_one() {
        let s = Span::new(3).add_vector(&v(&[1, 0, 0])).unwrap();
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn dependent_vector_keeps_rank() {
        // (1,1,0) + (0,1,1) = (1,0,1)
        let a = v(&[1, 1, 0]);
        let b = v(&[0, 1, 1]);
        assert_eq!(a.sum(&b).unwrap(), v(&[1, 0, 1]));
        let s = span_of(3, &[a, b]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.add_vector(&v(&[1, 0, 1])).unwrap().rank(), 2);
        assert!(s.contains(&v(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn contains_basics() {
        let s = span_of(2, &[v(&[1, 0])]);
        assert!(s.contains(&CoordVector::zeros(2)).unwrap());
        assert!(!s.contains(&v(&[0, 1])).unwrap());
    }

    #[test]
    fn fullness() {
        assert!(Span::new(0).is_full());
        assert!(span_of(2, &[v(&[1, 0]), v(&[0, 1])]).is_full());
        assert!(!span_of(2, &[v(&[1, 1])]).is_full());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let s = Span::new(3);
        assert!(matches!(
            s.add_vector(&v(&[1, 0])),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        ));
        assert!(s.contains(&v(&[1])).is_err());
        let mut a = v(&[1, 0]);
        assert!(a.add_assign(&v(&[1, 0, 0])).is_err());
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let mut a = CoordVector::zeros(130);
        a.set(0, true);
        a.set(64, true);
        a.set(129, true);
        assert_eq!(a.ones().collect::<Vec<_>>(), [0, 64, 129]);
        assert_eq!(a.count_ones(), 3);
        let s = span_of(130, &[a.clone(), CoordVector::unit(130, 64)]);
        assert!(s.contains(&CoordVector::unit(130, 64)).unwrap());
        assert!(!s.contains(&CoordVector::unit(130, 129)).unwrap());
        assert_eq!(s.rows()[1], CoordVector::unit(130, 64));
    }

    fn arb_vectors(len: usize) -> impl Strategy<Value = Vec<CoordVector>> {
        prop::collection::vec(
            prop::collection::vec(any::<bool>(), len).prop_map(|b| CoordVector::from_bits(&b)),
            0..12,
        )
    }

    proptest! {
        #[test]
        fn added_vector_is_contained(vs in arb_vectors(9), extra in prop::collection::vec(any::<bool>(), 9)) {
            let s = span_of(9, &vs);
            let x = CoordVector::from_bits(&extra);
            let t = s.add_vector(&x).unwrap();
            prop_assert!(t.contains(&x).unwrap());
            prop_assert!(t.rank() == s.rank() || t.rank() == s.rank() + 1);
            for w in &vs {
                prop_assert!(t.contains(w).unwrap());
            }
        }

        #[test]
        fn echelon_form_is_canonical(vs in arb_vectors(7), seed in any::<u64>()) {
            let a = span_of(7, &vs);
            let mut shuffled = vs.clone();
            // deterministic reorder plus redundant sums of existing rows
            shuffled.rotate_left(if vs.is_empty() { 0 } else { (seed as usize) % vs.len() });
            shuffled.reverse();
            if vs.len() >= 2 {
                shuffled.push(vs[0].sum(&vs[1]).unwrap());
            }
            let b = span_of(7, &shuffled);
            prop_assert_eq!(a, b.clone());
            let mut last = None;
            for row in b.rows() {
                let p = row.first_one();
                prop_assert!(p.is_some());
                prop_assert!(last < p);
                for other in b.rows() {
                    if other != row {
                        prop_assert!(!other.get(p.unwrap()));
                    }
                }
                last = p;
            }
        }
    }
}
