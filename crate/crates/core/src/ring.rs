//! Truncated mod-2 cohomology rings of Stiefel manifolds.
//!
//! `H^*(V_k(F^n); Z/2)` has a simple system of generators: squarefree
//! monomials in the generators form an additive basis, and a repeated
//! factor is rewritten by the generator's square rule.
//!
//! * Real: generators `a_i` in degree `i` for `i = n-k, ..., n-1`, with
//!   `a_i^2 = a_{2i}` when `2i <= n-1` and `a_i^2 = 0` otherwise.
//! * Complex and quaternionic: generators `y_j` in degree `2j-1`
//!   (resp. `4j-1`) for `j = n-k+1, ..., n`, all squares zero (an exterior
//!   algebra on odd-degree classes).
//!
//! Rings are truncated at a chosen `max_degree`; only the bases up to that
//! degree are materialized.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::CoordVector;

/// Largest `n` supported; monomials are bitmasks indexed by generator label.
pub const MAX_N: u32 = 63;

/// The (skew-)field the frames are taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Field {
    #[cfg_attr(feature = "serde", serde(rename = "R"))]
    Real,
    #[cfg_attr(feature = "serde", serde(rename = "C"))]
    Complex,
    #[cfg_attr(feature = "serde", serde(rename = "H"))]
    Quaternion,
}

impl Field {
    pub const ALL: [Field; 3] = [Field::Real, Field::Complex, Field::Quaternion];

    /// Real dimension `c` of the field: 1, 2 or 4.
    pub fn real_dimension(self) -> u32 {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
            Field::Quaternion => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Field::Real => "R",
            Field::Complex => "C",
            Field::Quaternion => "H",
        }
    }

    fn generator_letter(self) -> char {
        match self {
            Field::Real => 'a',
            Field::Complex | Field::Quaternion => 'y',
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFieldError;

impl fmt::Display for ParseFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of R, C, H")
    }
}

impl core::error::Error for ParseFieldError {}

impl FromStr for Field {
    type Err = ParseFieldError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "R" | "r" | "real" => Ok(Field::Real),
            "C" | "c" | "complex" => Ok(Field::Complex),
            "H" | "h" | "quaternion" => Ok(Field::Quaternion),
            _ => Err(ParseFieldError),
        }
    }
}

/// What a generator squares to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareRule {
    Generator(u32),
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub label: u32,
    pub degree: u32,
    pub square: SquareRule,
}

/// A squarefree product of generators, stored as a bitmask over labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    bits: u64,
    degree: u32,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial { bits: 0, degree: 0 };

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_unit(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, label: u32) -> bool {
        label < 64 && self.bits >> label & 1 == 1
    }

    /// Generator labels in increasing order.
    pub fn factors(&self) -> impl Iterator<Item = u32> + '_ {
        let mut rest = self.bits;
        core::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let label = rest.trailing_zeros();
            rest &= rest - 1;
            Some(label)
        })
    }

    pub fn factor_count(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Lowest factor and the remaining monomial, unless this is the unit.
    pub fn split_first(&self, ring: &RingPresentation) -> Option<(GeneratorSpec, Monomial)> {
        if self.bits == 0 {
            return None;
        }
        let label = self.bits.trailing_zeros();
        let g = ring.generator(label)?;
        Some((
            g,
            Monomial {
                bits: self.bits & (self.bits - 1),
                degree: self.degree - g.degree,
            },
        ))
    }

    fn with(self, g: &GeneratorSpec) -> Monomial {
        Monomial {
            bits: self.bits | 1 << g.label,
            degree: self.degree + g.degree,
        }
    }

    fn without(self, g: &GeneratorSpec) -> Monomial {
        Monomial {
            bits: self.bits & !(1 << g.label),
            degree: self.degree - g.degree,
        }
    }
}

impl Ord for Monomial {
    /// Lexicographic on the increasing factor lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors().cmp(other.factors())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for label in self.factors() {
            write!(f, "g{label}")?;
        }
        Ok(())
    }
}

/// A homogeneous class: coordinates over the degree's monomial basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    degree: u32,
    coords: CoordVector,
}

impl Element {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coords(&self) -> &CoordVector {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        if self.degree != other.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree as usize,
                found: other.degree as usize,
            });
        }
        Ok(Element {
            degree: self.degree,
            coords: self.coords.sum(&other.coords)?,
        })
    }

    pub fn add_assign(&mut self, other: &Element) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree as usize,
                found: other.degree as usize,
            });
        }
        self.coords.add_assign(&other.coords)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element(deg {}, {:?})", self.degree, self.coords)
    }
}

/// Which low degrees were checked against the known connectivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Connectivity {
    /// `c(n-k+1) - 1`: the first positive degree with nonzero cohomology.
    pub first_nonzero_degree: u32,
    /// Degrees `1..=certified_through` were checked.
    pub certified_through: u32,
}

/// `H^*(V_k(F^n); Z/2)` truncated at `max_degree`.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    field: Field,
    n: u32,
    k: u32,
    max_degree: u32,
    generators: Vec<GeneratorSpec>,
    bases: Vec<Vec<Monomial>>,
    index: Vec<BTreeMap<u64, usize>>,
    manifold_dimension: u32,
    connectivity: Connectivity,
}

/// Checks that `V_k(F^n)` is a connected Stiefel manifold the engine handles.
pub fn validate_parameters(field: Field, n: u32, k: u32) -> Result<()> {
    let fail = |reason| Err(Error::ParameterRange { field, n, k, reason });
    if k <= 1 {
        return fail("k must be at least 2 (k = 1 is a sphere)");
    }
    if k > n {
        return fail("k must not exceed n");
    }
    if field == Field::Real && k == n {
        return fail("V_n(R^n) = O(n) is not connected");
    }
    if n > MAX_N {
        return fail("n above the supported maximum of 63");
    }
    Ok(())
}

/// `dim V_k(F^n)`, the sum of the generator degrees.
pub fn manifold_dimension(field: Field, n: u32, k: u32) -> u32 {
    match field {
        Field::Real => k * (n - k) + k * (k - 1) / 2,
        Field::Complex => k * (2 * n - k),
        Field::Quaternion => k * (4 * n - 2 * k + 1),
    }
}

/// `c(n-k+1) - 2`: every degree in `1..=` this is zero.
pub fn connectivity_bound(field: Field, n: u32, k: u32) -> u32 {
    field.real_dimension() * (n - k + 1) - 2
}

impl RingPresentation {
    pub fn build(field: Field, n: u32, k: u32, max_degree: u32) -> Result<Self> {
        validate_parameters(field, n, k)?;
        if max_degree < 1 {
            return Err(Error::MaxDegree(max_degree));
        }
        let generators: Vec<GeneratorSpec> = match field {
            Field::Real => (n - k..n)
                .map(|i| GeneratorSpec {
                    label: i,
                    degree: i,
                    square: if 2 * i < n {
                        SquareRule::Generator(2 * i)
                    } else {
                        SquareRule::Zero
                    },
                })
                .collect(),
            Field::Complex | Field::Quaternion => {
                let c = field.real_dimension();
                (n - k + 1..=n)
                    .map(|j| GeneratorSpec {
                        label: j,
                        degree: c * j - 1,
                        square: SquareRule::Zero,
                    })
                    .collect()
            }
        };

        let mut bases: Vec<Vec<Monomial>> = (0..=max_degree).map(|_| Vec::new()).collect();
        collect_monomials(&generators, 0, Monomial::UNIT, max_degree, &mut bases);
        for basis in &mut bases {
            basis.sort();
        }
        let index = bases
            .iter()
            .map(|basis| basis.iter().enumerate().map(|(i, m)| (m.bits, i)).collect())
            .collect();

        let first = connectivity_bound(field, n, k) + 1;
        let ring = RingPresentation {
            field,
            n,
            k,
            max_degree,
            generators,
            bases,
            index,
            manifold_dimension: manifold_dimension(field, n, k),
            connectivity: Connectivity {
                first_nonzero_degree: first,
                certified_through: first.min(max_degree),
            },
        };
        ring.certify_connectivity()?;
        Ok(ring)
    }

    fn certify_connectivity(&self) -> Result<()> {
        let first = self.connectivity.first_nonzero_degree;
        for degree in 0..=self.connectivity.certified_through {
            let expected = usize::from(degree == 0 || degree == first);
            let dimension = self.bases[degree as usize].len();
            if dimension != expected {
                return Err(Error::Connectivity {
                    degree,
                    dimension,
                    expected,
                });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn manifold_dimension(&self) -> u32 {
        self.manifold_dimension
    }

    pub fn connectivity(&self) -> Connectivity {
        self.connectivity
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn generator(&self, label: u32) -> Option<GeneratorSpec> {
        let first = self.generators.first()?.label;
        label
            .checked_sub(first)
            .and_then(|i| self.generators.get(i as usize))
            .copied()
    }

    /// Monomial basis of `H^d` in lexicographic order.
    pub fn basis(&self, d: u32) -> Result<&[Monomial]> {
        self.check_degree(d)?;
        Ok(&self.bases[d as usize])
    }

    /// `dim H^d`; zero above the truncation bound is not assumed, so out-of-range is an error.
    pub fn dim(&self, d: u32) -> Result<usize> {
        self.basis(d).map(<[Monomial]>::len)
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m.degree as usize)?.get(&m.bits).copied()
    }

    fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                degree: d,
                max_degree: self.max_degree,
            });
        }
        Ok(())
    }

    pub fn zero(&self, d: u32) -> Result<Element> {
        Ok(Element {
            degree: d,
            coords: CoordVector::zeros(self.dim(d)?),
        })
    }

    pub fn one(&self) -> Element {
        Element {
            degree: 0,
            coords: CoordVector::unit(1, 0),
        }
    }

    /// Builds an element from a coordinate vector over the degree-`d` basis.
    pub fn element(&self, d: u32, coords: CoordVector) -> Result<Element> {
        let dim = self.dim(d)?;
        if coords.len() != dim {
            return Err(Error::LengthMismatch {
                expected: dim,
                found: coords.len(),
            });
        }
        Ok(Element { degree: d, coords })
    }

    pub fn monomial_element(&self, m: &Monomial) -> Result<Element> {
        let dim = self.dim(m.degree)?;
        let i = self
            .index_of(m)
            .expect("squarefree monomials within the bound are basis elements");
        Ok(Element {
            degree: m.degree,
            coords: CoordVector::unit(dim, i),
        })
    }

    pub fn generator_element(&self, label: u32) -> Result<Element> {
        let g = self.generator(label).ok_or(Error::UnknownGenerator(label))?;
        self.monomial_element(&Monomial::UNIT.with(&g))
    }

    /// The product of the listed generators, repeats allowed.
    pub fn product_of_generators(&self, labels: &[u32]) -> Result<Element> {
        let mut degree = 0;
        for &label in labels {
            degree += self.generator(label).ok_or(Error::UnknownGenerator(label))?.degree;
        }
        if degree > self.max_degree {
            return Err(Error::DegreeOverflow {
                degree,
                max_degree: self.max_degree,
            });
        }
        let mut acc = Some(Monomial::UNIT);
        for &label in labels {
            let g = self.generator(label).expect("checked above");
            acc = acc.and_then(|m| self.times_generator(m, &g));
        }
        match acc {
            Some(m) => self.monomial_element(&m),
            None => self.zero(degree),
        }
    }

    /// Basis monomials with nonzero coefficient in `x`.
    pub fn monomials_of<'a>(&'a self, x: &'a Element) -> impl Iterator<Item = Monomial> + 'a {
        x.coords
            .ones()
            .map(move |i| self.bases[x.degree as usize][i])
    }

    fn times_generator(&self, m: Monomial, g: &GeneratorSpec) -> Option<Monomial> {
        let mut m = m;
        let mut g = *g;
        loop {
            if !m.contains(g.label) {
                return Some(m.with(&g));
            }
            m = m.without(&g);
            match g.square {
                SquareRule::Zero => return None,
                SquareRule::Generator(label) => {
                    g = self.generator(label).expect("square rules name ring generators");
                }
            }
        }
    }

    /// Product of two basis monomials; `None` when it rewrites to zero.
    ///
    /// Repeated factors are replaced by their squares; each rewrite moves to
    /// a strictly larger label, so the loop terminates.
    pub fn monomial_product(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        let mut acc = *a;
        for label in b.factors() {
            let g = self.generator(label).expect("monomial factors are ring generators");
            acc = self.times_generator(acc, &g)?;
        }
        Some(acc)
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        let degree = x.degree + y.degree;
        if degree > self.max_degree {
            return Err(Error::DegreeOverflow {
                degree,
                max_degree: self.max_degree,
            });
        }
        let mut out = self.zero(degree)?;
        for a in self.monomials_of(x) {
            for b in self.monomials_of(y) {
                if let Some(m) = self.monomial_product(&a, &b) {
                    let i = self.index_of(&m).expect("product lies in the basis");
                    out.coords.flip(i);
                }
            }
        }
        Ok(out)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return String::from("1");
        }
        let letter = self.field.generator_letter();
        m.factors().map(|l| format!("{letter}_{l}")).collect()
    }

    /// Terms of `x` as strings, e.g. `["a_1a_2", "a_3"]`.
    pub fn format_terms(&self, x: &Element) -> Vec<String> {
        self.monomials_of(x).map(|m| self.format_monomial(&m)).collect()
    }

    pub fn format_element(&self, x: &Element) -> String {
        let terms = self.format_terms(x);
        if terms.is_empty() {
            String::from("0")
        } else {
            terms.join(" + ")
        }
    }
}

fn collect_monomials(
    generators: &[GeneratorSpec],
    start: usize,
    current: Monomial,
    max_degree: u32,
    bases: &mut [Vec<Monomial>],
) {
    bases[current.degree as usize].push(current);
    for (i, g) in generators.iter().enumerate().skip(start) {
        if current.degree + g.degree > max_degree {
            // generators are sorted by degree
            break;
        }
        collect_monomials(generators, i + 1, current.with(g), max_degree, bases);
    }
}
