// SPDX-License-Identifier: Apache-2.0

//! Covolumes, the product lattice `S(1) * l`, the rank-3 quotient and its
//! successive minima, and exact primitive-vector counts.

mod count;
pub(crate) mod ellipsoid;
mod form;
mod minima;
mod quotient;
pub(crate) mod reduce;

pub use count::{count_primitive, gon_main_term};
pub use ellipsoid::{for_each_in_ellipsoid, form_value};
pub use form::{product_lattice, sl_polynomial, IntLattice, LinearForm};
pub use minima::{successive_minima, SuccessiveMinima};
pub use quotient::{dist_to_v, quotient, QuotientLattice};

/// `max(1, ln t)`
pub fn log_star(t: f64) -> f64 {
    t.ln().max(1.0)
}
