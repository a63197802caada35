//! Exact computations in the type-A Hecke algebra.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! - [`coxeter`]: permutations, words, Bruhat order, patterns and the
//!   Hessenberg / codominant dictionary.
//! - [`laurent`]: Laurent polynomials in `v = q^{1/2}` with big-integer or
//!   rational coefficients, plus a small rational-function type.
//! - [`hecke`]: the Hecke algebra in the `T` basis, the bar involution and
//!   the Kazhdan-Lusztig basis.
//! - [`parabolic`]: parabolic quotients, the Deodhar action, induced
//!   characters, good words and good root sequences.
//! - [`symfunc`]: symmetric functions in the classical bases, character
//!   tables, Frobenius characters, immanants and plethysm by `x/(q-1)`.
//! - [`chromatic`]: chromatic quasisymmetric functions and unicellular LLT
//!   polynomials of indifference graphs.
//! - [`engine`]: caches shared by the pipelines that combine the above.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod budget;
pub mod chromatic;
pub mod coxeter;
pub mod engine;
pub mod error;
pub mod group;
pub mod hecke;
pub mod laurent;
pub mod parabolic;
pub mod symfunc;

pub use budget::Budget;
pub use chromatic::{IndifferenceGraph, ScanKind};
pub use coxeter::{HessenbergFunction, ParabolicSet, Permutation, Transposition, Word};
pub use engine::Engine;
pub use error::{Error, Result};
pub use hecke::{HeckeElement, KlTable};
pub use laurent::{Laurent, LaurentQ, LaurentRat, RatFunc};
pub use parabolic::ParabolicQuotient;
pub use symfunc::{Basis, Partition, SymFunc};
