// SPDX-License-Identifier: Apache-2.0

//! The point model: canonical points, ideal lattices and enumeration by
//! height.

mod enumerate;
mod ideal;
mod point;
mod poly;

pub use enumerate::{
    canonical_forms, count_nst, enumerate_points, fiber_count, fiber_count_scaled, fiber_counts,
    fiber_points, for_each_point, parse_and_count,
};
pub use ideal::{ideal_generators, ideal_lattice};
pub use point::{canonicalize, HilbPoint};
pub use poly::{dim_s, eval, monomial_index, monomials, shift, QuadraticForm};
