// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;

use crate::exactlin::{saturate, IntMatrix};
use crate::hilb::point::HilbPoint;
use crate::hilb::poly::{dim_s, monomials, shift};
use crate::lattice::IntLattice;
use crate::scalar::Scalar;

/// Generators of degree `e` of the ideal `(l, q)`: `l * S(e-1)` and `q * S(e-2)`.
pub fn ideal_generators<T: Scalar>(z: &HilbPoint<T>, e: u32) -> IntMatrix<BigInt> {
    assert!(e >= 1, "degree must be positive");
    let l: Vec<BigInt> = z.ell().coeffs().iter().map(|x| x.to_bigint()).collect();
    let q: Vec<BigInt> = z.q_lift().iter().map(|x| x.to_bigint()).collect();
    let mut rows: Vec<Vec<BigInt>> = monomials(e - 1).into_iter().map(|m| shift(&l, 1, m)).collect();
    if e >= 2 {
        rows.extend(monomials(e - 2).into_iter().map(|m| shift(&q, 2, m)));
    }
    IntMatrix::from_rows(&rows).expect("generator rows share one length")
}

/// The saturated lattice `I_Z(e)` of degree-`e` forms vanishing on `Z`.
pub fn ideal_lattice<T: Scalar>(z: &HilbPoint<T>, e: u32) -> IntLattice<BigInt> {
    let sat = saturate(&ideal_generators(z, e)).expect("ideal generators are nonzero");
    debug_assert_eq!(sat.rows(), dim_s(e) - 2);
    IntLattice::new(sat).expect("saturated basis is independent")
}
