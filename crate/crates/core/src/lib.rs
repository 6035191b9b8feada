// SPDX-License-Identifier: Apache-2.0

//! Exact enumeration and counting of integral points on the Hilbert scheme
//! of two points in the projective plane.
//!
//! A point is a pair `(l, q)`: a primitive linear form and a quadratic form
//! whose coset modulo `S(1) * l` is primitive. Heights are products of powers
//! of the covolumes of the ideal lattices `I(1)` and `I(2)`.
//!
//! The core is generic over an exact integer [`Scalar`]; the aliases below fix
//! the two instantiations used in practice.

pub mod asymptotics;
pub mod constants;
pub mod error;
pub mod exactlin;
pub mod heights;
pub mod hilb;
pub mod lattice;
pub mod query;
pub mod report;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Real, Scalar};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Fixed-width integer used on hot paths; overflow panics.
pub type Wide = i128;

pub type Form = lattice::LinearForm<Wide>;
pub type Quotient = lattice::QuotientLattice<Wide>;
pub type Matrix = exactlin::IntMatrix<Int>;
