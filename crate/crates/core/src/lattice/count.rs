// SPDX-License-Identifier: Apache-2.0

use num_rational::Ratio;

use crate::constants;
use crate::lattice::ellipsoid::for_each_in_ellipsoid;
use crate::lattice::quotient::QuotientLattice;
use crate::scalar::{gcd_slice, Real, Scalar};

/// Largest integer `n` with `n < p * r2`, i.e. the inclusive bound on the
/// scaled norm for the strict condition `|x|^2 < r2`.
pub(crate) fn strict_scaled_bound<T: Scalar>(p: &T, r2: &Ratio<T>) -> T {
    (p.clone() * r2.numer().clone() - T::one()).div_floor(r2.denom())
}

/// Number of primitive `x` (both signs, origin excluded) with `|x|^2 < r2`.
pub fn count_primitive<T: Scalar>(q: &QuotientLattice<T>, r2: &Ratio<T>) -> u64 {
    let bound = strict_scaled_bound(q.product_covol2(), r2);
    let mut n = 0u64;
    for_each_in_ellipsoid(q.form(), &bound, |x, _| {
        if gcd_slice(x).is_one() {
            n += 1;
        }
    });
    n
}

/// `(4 pi / (3 zeta(3))) R^3 / covol`.
pub fn gon_main_term<F: Real>(covol: F, r: F) -> F {
    let four = F::from_f64(4.0).unwrap();
    let three = F::from_f64(3.0).unwrap();
    four * F::PI() / (three * constants::zeta3::<F>()) * r.powi(3) / covol
}

impl<T: Scalar> QuotientLattice<T> {
    pub fn gon_main_term(&self, r: f64) -> f64 {
        gon_main_term(1.0 / self.product_covol2().to_f64_lossy().sqrt(), r)
    }
}
