// SPDX-License-Identifier: Apache-2.0

//! Exact integer linear algebra: Hermite normal form, kernels, saturation,
//! Gram determinants and Smith minors.

mod hnf;
mod matrix;
mod rational;

pub use hnf::{
    content, gram_det2, hnf, hnf_with_transform, integer_kernel, is_primitive, rank, saturate,
    smith_minor_gcd, Hnf,
};
pub use matrix::{adjugate3, det, det3, dot, IntMatrix};
pub use rational::RationalGram;


use crate::lattice::LinearForm;
use crate::scalar::Scalar;

/// HNF basis `(e, f)` of the rank-2 lattice `{v in Z^3 : l(v) = 0}`.
pub fn kernel_basis<T: Scalar>(l: &LinearForm<T>) -> ([T; 3], [T; 3]) {
    let row = IntMatrix::from_rows(&[l.coeffs().to_vec()]).expect("nonzero form");
    let k = hnf(&integer_kernel(&row)).expect("kernel of a nonzero form has rank 2");
    debug_assert_eq!(k.rows(), 2);
    let e = [k.get(0, 0).clone(), k.get(0, 1).clone(), k.get(0, 2).clone()];
    let f = [k.get(1, 0).clone(), k.get(1, 1).clone(), k.get(1, 2).clone()];
    (e, f)
}

pub fn cross<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> [T; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}
