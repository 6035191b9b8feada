// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::exactlin::{cross, kernel_basis};
use crate::heights::binary::{comb3, restrict_to_line, BinaryQuadraticForm, PointClass};
use crate::hilb::HilbPoint;
use crate::scalar::{gcd_slice, sign_canonical, Scalar};

/// Two independent primitive integral solutions of `l = q = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSolutions<T> {
    pub v: [T; 3],
    pub w: [T; 3],
}

/// Primitive `(S, T)` roots of a binary form with square discriminant.
/// For `A = 0` the root `(1, 0)` comes first.
pub(crate) fn rational_roots<T: Scalar>(form: &BinaryQuadraticForm<T>) -> ([T; 2], [T; 2]) {
    let d = form.disc();
    let s = d.sqrt();
    debug_assert!(s.clone() * s.clone() == d);
    let prim = |mut r: [T; 2]| {
        let g = gcd_slice(&r);
        for x in r.iter_mut() {
            *x = x.clone() / g.clone();
        }
        r
    };
    if form.a.is_zero() {
        (
            [T::one(), T::zero()],
            prim([-form.c.clone(), form.b.clone()]),
        )
    } else {
        let two_a = T::from_i64_exact(2) * form.a.clone();
        (
            prim([-form.b.clone() + s.clone(), two_a.clone()]),
            prim([-form.b.clone() - s, two_a]),
        )
    }
}

pub(crate) fn to_space<T: Scalar>(r: &[T; 2], e: &[T; 3], f: &[T; 3]) -> [T; 3] {
    let mut v = comb3(&r[0], e, &r[1], f);
    sign_canonical(&mut v);
    v
}

pub fn split_solutions<T: Scalar>(z: &HilbPoint<T>) -> Result<SplitSolutions<T>> {
    let form = restrict_to_line(z);
    if PointClass::of_disc(&form.disc()) != PointClass::Split {
        return Err(Error::WrongClass("split"));
    }
    let (e, f) = kernel_basis(z.ell());
    let (r1, r2) = rational_roots(&form);
    let sol = SplitSolutions {
        v: to_space(&r1, &e, &f),
        w: to_space(&r2, &e, &f),
    };
    debug_assert!(cross(&sol.v, &sol.w).iter().any(|x| !x.is_zero()));
    Ok(sol)
}

/// `gcd(v x w)^2`
pub fn disc_split_gcd<T: Scalar>(sol: &SplitSolutions<T>) -> T {
    let g = gcd_slice(&cross(&sol.v, &sol.w));
    g.clone() * g
}
