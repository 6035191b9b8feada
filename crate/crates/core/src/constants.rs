// SPDX-License-Identifier: Apache-2.0

//! Mathematical constants to 50 decimal digits.
//!
//! Both digit strings were produced from the standard series (Machin's
//! formula for pi, Apery's accelerated series for zeta(3)) and agree with
//! published tables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::scalar::Real;

pub const PI_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510";
pub const ZETA3_DIGITS: &str = "1.20205690315959428539973816151144999076498629234049";

pub const ZETA3: f64 = 1.202_056_903_159_594_3;

pub fn zeta3<F: Real>() -> F {
    F::from_f64(ZETA3).unwrap()
}

/// `2 (24 + pi^2) / (3 zeta(3)^2)`
pub fn le_rudulier_constant() -> f64 {
    let pi = std::f64::consts::PI;
    2.0 * (24.0 + pi * pi) / (3.0 * ZETA3 * ZETA3)
}

/// A decimal string truncated to 40 places as an exact rational, together
/// with the same value plus one unit in the last place.
fn bracket(digits: &str) -> (BigRational, BigRational) {
    let (int, frac) = digits.split_once('.').expect("decimal point");
    let frac = &frac[..40];
    let num: BigInt = format!("{int}{frac}").parse().expect("digits");
    let den = BigInt::from(10u32).pow(40u32);
    let lo = BigRational::new(num.clone(), den.clone());
    let hi = BigRational::new(num + BigInt::one(), den);
    (lo, hi)
}

/// Rational bracket `lo < pi < hi`.
pub fn pi_bracket() -> (BigRational, BigRational) {
    bracket(PI_DIGITS)
}

/// Rational bracket `lo < pi^2 < hi`.
pub fn pi_sq_bracket() -> (BigRational, BigRational) {
    let (lo, hi) = pi_bracket();
    (lo.clone() * lo, hi.clone() * hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn digits_match_f64() {
        let (lo, hi) = pi_bracket();
        assert!(lo.to_f64().unwrap() <= std::f64::consts::PI);
        assert!(hi.to_f64().unwrap() >= std::f64::consts::PI);
        let z: f64 = ZETA3_DIGITS.parse().unwrap();
        assert_eq!(z, ZETA3);
        let p: f64 = PI_DIGITS.parse().unwrap();
        assert_eq!(p, std::f64::consts::PI);
    }

    #[test]
    fn le_rudulier_value() {
        assert!((le_rudulier_constant() - 15.626).abs() < 1e-3);
    }
}
