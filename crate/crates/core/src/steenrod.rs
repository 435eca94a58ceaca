//! Steenrod squares on Stiefel manifold cohomology.
//!
//! On a real generator, `Sq^i(a_j) = C(j, i) a_{j+i}` when `j + i <= n - 1`
//! and zero otherwise. Monomials are handled by the Cartan formula,
//! splitting off the lowest factor. For complex and quaternionic rings only
//! `Sq^1 = 0` (integral cohomology is torsion free) and the unstable axioms
//! are available; other squares on generators are rejected.

use alloc::collections::BTreeMap;
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::ring::{Element, Field, GeneratorSpec, Monomial, RingPresentation};

/// Parity of the binomial coefficient `C(j, i)`.
///
/// Odd exactly when every binary digit of `i` is at most the matching digit
/// of `j`.
#[inline]
pub fn binom_mod2(j: u64, i: u64) -> bool {
    i & !j == 0
}

/// `Sq^i` of a single generator.
pub fn sq_on_generator(ring: &RingPresentation, i: u32, g: &GeneratorSpec) -> Result<Element> {
    let target = g.degree + i;
    if target > ring.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: target,
            max_degree: ring.max_degree(),
        });
    }
    if i == 0 {
        return ring.generator_element(g.label);
    }
    if i > g.degree {
        return ring.zero(target);
    }
    match ring.field() {
        Field::Real => {
            let j = g.label;
            if binom_mod2(j.into(), i.into()) && j + i < ring.n() {
                ring.generator_element(j + i)
            } else {
                ring.zero(target)
            }
        }
        // Sq^1 is the Bockstein; Sq^deg is the cup square, zero here.
        Field::Complex | Field::Quaternion if i == 1 || i == g.degree => ring.zero(target),
        field => Err(Error::UnsupportedSquare {
            field,
            i,
            degree: g.degree,
        }),
    }
}

/// Memoized Steenrod squares over one ring.
///
/// The cache sits behind a `RefCell`, so a table is confined to one thread;
/// parallel callers build one table per worker.
pub struct SqTable<'r> {
    ring: &'r RingPresentation,
    memo: RefCell<BTreeMap<(u32, Monomial), Element>>,
}

impl<'r> SqTable<'r> {
    pub fn new(ring: &'r RingPresentation) -> Self {
        SqTable {
            ring,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn ring(&self) -> &'r RingPresentation {
        self.ring
    }

    pub fn sq(&self, i: u32, x: &Element) -> Result<Element> {
        let target = x.degree() + i;
        if target > self.ring.max_degree() {
            return Err(Error::DegreeOverflow {
                degree: target,
                max_degree: self.ring.max_degree(),
            });
        }
        let mut out = self.ring.zero(target)?;
        for m in self.ring.monomials_of(x) {
            out.add_assign(&self.sq_monomial(i, &m)?)?;
        }
        Ok(out)
    }

    pub fn sq_monomial(&self, i: u32, m: &Monomial) -> Result<Element> {
        let target = m.degree() + i;
        if target > self.ring.max_degree() {
            return Err(Error::DegreeOverflow {
                degree: target,
                max_degree: self.ring.max_degree(),
            });
        }
        if i == 0 {
            return self.ring.monomial_element(m);
        }
        if i > m.degree() {
            return self.ring.zero(target);
        }
        if let Some(hit) = self.memo.borrow().get(&(i, *m)) {
            return Ok(hit.clone());
        }
        let (g, rest) = m.split_first(self.ring).expect("i <= degree, so m is not the unit");
        let mut out = self.ring.zero(target)?;
        // Cartan: Sq^i(g * rest) = sum Sq^a(g) Sq^(i-a)(rest)
        for a in 0..=i.min(g.degree) {
            let b = i - a;
            if b > rest.degree() {
                continue;
            }
            let left = sq_on_generator(self.ring, a, &g)?;
            if left.is_zero() {
                continue;
            }
            let right = self.sq_monomial(b, &rest)?;
            out.add_assign(&self.ring.multiply(&left, &right)?)?;
        }
        self.memo.borrow_mut().insert((i, *m), out.clone());
        Ok(out)
    }

    #[cfg(test)]
    fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::CoordVector;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    /// Pascal's triangle mod 2 built by addition only.
    fn pascal_parity(rows: usize) -> Vec<Vec<bool>> {
        let mut t: Vec<Vec<bool>> = vec![vec![true]];
        for j in 1..=rows {
            let prev = &t[j - 1];
            let row = (0..=j)
                .map(|i| {
                    let left = if i > 0 { prev[i - 1] } else { false };
                    let right = prev.get(i).copied().unwrap_or(false);
                    left ^ right
                })
                .collect();
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_parity_examples() {
        let p = pascal_parity(8);
        for j in 0..8u64 {
            assert!(binom_mod2(j, 0));
        }
        assert_eq!(binom_mod2(2, 1), p[2][1]);
        assert!(!binom_mod2(2, 1));
        assert!(binom_mod2(3, 1) && p[3][1]);
        assert!(!binom_mod2(4, 1) && !p[4][1]);
    }

    #[test]
    fn binomial_parity_matches_pascal_up_to_64() {
        let p = pascal_parity(64);
        for j in 0..=64usize {
            for i in 0..=j {
                assert_eq!(binom_mod2(j as u64, i as u64), p[j][i], "C({j},{i})");
            }
        }
    }

    fn gen(r: &RingPresentation, label: u32) -> GeneratorSpec {
        r.generator(label).unwrap()
    }

    #[test]
    fn generator_formula_examples() {
        let r = RingPresentation::build(Field::Real, 7, 3, 12).unwrap();
        assert!(sq_on_generator(&r, 1, &gen(&r, 4)).unwrap().is_zero());
        assert_eq!(
            sq_on_generator(&r, 1, &gen(&r, 5)).unwrap(),
            r.generator_element(6).unwrap()
        );
        // a_6 + 1 = 7 > n - 1
        assert!(sq_on_generator(&r, 1, &gen(&r, 6)).unwrap().is_zero());
        assert_eq!(
            sq_on_generator(&r, 0, &gen(&r, 5)).unwrap(),
            r.generator_element(5).unwrap()
        );

        let so8 = RingPresentation::build(Field::Real, 8, 7, 10).unwrap();
        let sq1a1 = sq_on_generator(&so8, 1, &gen(&so8, 1)).unwrap();
        assert_eq!(sq1a1, so8.generator_element(2).unwrap());
        let a1 = so8.generator_element(1).unwrap();
        assert_eq!(sq1a1, so8.multiply(&a1, &a1).unwrap());
    }

    #[test]
    fn cartan_examples() {
        let so8 = RingPresentation::build(Field::Real, 8, 7, 10).unwrap();
        let t = SqTable::new(&so8);
        let a1sq = so8.product_of_generators(&[1, 1]).unwrap();
        assert!(t.sq(1, &a1sq).unwrap().is_zero());
        let x = so8.product_of_generators(&[1, 3]).unwrap();
        assert_eq!(t.sq(0, &x).unwrap(), x);

        let v26 = RingPresentation::build(Field::Real, 6, 2, 9).unwrap();
        let t = SqTable::new(&v26);
        assert!(t.sq(1, &v26.generator_element(4).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn complex_and_quaternionic_squares() {
        let u4 = RingPresentation::build(Field::Complex, 4, 4, 16).unwrap();
        let t = SqTable::new(&u4);
        for d in 0..16 {
            for m in u4.basis(d).unwrap() {
                assert!(t.sq_monomial(1, m).unwrap().is_zero());
            }
        }
        let y2 = gen(&u4, 2);
        assert!(matches!(
            sq_on_generator(&u4, 2, &y2),
            Err(Error::UnsupportedSquare { field: Field::Complex, i: 2, degree: 3 })
        ));
        assert!(sq_on_generator(&u4, 3, &y2).unwrap().is_zero());
        assert!(sq_on_generator(&u4, 4, &y2).unwrap().is_zero());

        let sp = RingPresentation::build(Field::Quaternion, 3, 2, 20).unwrap();
        let y2 = gen(&sp, 2);
        assert!(sq_on_generator(&sp, 1, &y2).unwrap().is_zero());
        assert!(sq_on_generator(&sp, 4, &y2).is_err());
    }

    #[test]
    fn truncation_overflow_is_an_error() {
        let r = RingPresentation::build(Field::Real, 5, 3, 4).unwrap();
        let t = SqTable::new(&r);
        assert!(matches!(
            t.sq(1, &r.generator_element(4).unwrap()),
            Err(Error::DegreeOverflow { degree: 5, .. })
        ));
    }

    #[test]
    fn memo_is_transparent() {
        let r = RingPresentation::build(Field::Real, 8, 5, 16).unwrap();
        let cached = SqTable::new(&r);
        for d in 0..=10 {
            for m in r.basis(d).unwrap() {
                for i in 0..=(16 - d).min(6) {
                    let first = cached.sq_monomial(i, m).unwrap();
                    let again = cached.sq_monomial(i, m).unwrap();
                    let fresh = SqTable::new(&r).sq_monomial(i, m).unwrap();
                    assert_eq!(first, again);
                    assert_eq!(first, fresh);
                }
            }
        }
        assert!(cached.memo_len() > 0);
    }

    proptest! {
        #[test]
        fn sq1_is_a_derivation(
            d1 in 0u32..=7, d2 in 0u32..=7,
            b1 in prop::collection::vec(any::<bool>(), 16),
            b2 in prop::collection::vec(any::<bool>(), 16),
        ) {
            let r = RingPresentation::build(Field::Real, 8, 6, 16).unwrap();
            let t = SqTable::new(&r);
            let x = r.element(d1, CoordVector::from_bits(&b1[..r.dim(d1).unwrap()])).unwrap();
            let y = r.element(d2, CoordVector::from_bits(&b2[..r.dim(d2).unwrap()])).unwrap();
            let lhs = t.sq(1, &r.multiply(&x, &y).unwrap()).unwrap();
            let rhs = r.multiply(&t.sq(1, &x).unwrap(), &y).unwrap()
                .add(&r.multiply(&x, &t.sq(1, &y).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
