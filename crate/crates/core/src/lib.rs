//! Symbolic GF(2) engine for the characteristic rank of vector bundles over
//! Stiefel manifolds `V_k(F^n)`, `F` one of `R`, `C`, `H`.
//!
//! * [`gf2`]: bit-packed vectors and echelon spans over GF(2).
//! * [`ring`]: truncated mod-2 cohomology rings with a simple system of generators.
//! * [`steenrod`]: Steenrod squares via binomial parity and the Cartan formula.
//! * [`wu`]: Wu-consistent Stiefel-Whitney assignments, characteristic rank,
//!   bounds, witnesses and vanishing checks.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod gf2;
pub mod ring;
pub mod steenrod;
pub mod wu;

pub use error::{Error, Result};
pub use gf2::{CoordVector, Span};
pub use ring::{Element, Field, GeneratorSpec, Monomial, RingPresentation, SquareRule};
pub use steenrod::{binom_mod2, sq_on_generator, SqTable};
