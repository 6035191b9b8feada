// SPDX-License-Identifier: Apache-2.0

//! Exact enumeration of integer points in a ternary positive definite
//! ellipsoid `x^T F x <= K`, using only integer arithmetic.

use num_traits::Signed;

use crate::exactlin::adjugate3;
use crate::scalar::Scalar;

/// Integers `x` with `a x^2 + 2 b x + c <= 0`, for `a > 0`, as a closed range.
pub(crate) fn quad_interval<T: Scalar>(a: &T, b: &T, c: &T) -> Option<(T, T)> {
    debug_assert!(a.is_positive());
    let s = match b.checked_mul(b).zip(a.checked_mul(c)).and_then(|(bb, ac)| bb.checked_sub(&ac)) {
        Some(disc) if disc.is_negative() => return None,
        Some(disc) => disc.sqrt(),
        None => {
            let (ab, bb, cb) = (a.to_bigint(), b.to_bigint(), c.to_bigint());
            let disc = &bb * &bb - &ab * &cb;
            if disc.is_negative() {
                return None;
            }
            T::from_bigint(&disc.sqrt()).expect("square root of the discriminant fits the scalar type")
        }
    };
    let one = T::one();
    let two = T::from_i64_exact(2);
    let f = |x: &T| a.clone() * x.clone() * x.clone() + two.clone() * b.clone() * x.clone() + c.clone();

    let lo_start = (-b.clone() - s.clone()).div_floor(a) - one.clone();
    let hi_start = (-b.clone() + s).div_floor(a) + two.clone();

    let mut hi = hi_start;
    while hi >= lo_start && f(&hi).is_positive() {
        hi = hi - one.clone();
    }
    let mut lo = lo_start;
    while lo <= hi && f(&lo).is_positive() {
        lo = lo + one.clone();
    }
    if lo > hi {
        None
    } else {
        Some((lo, hi))
    }
}

/// Calls `visit(x, value)` for every integer `x` with `value = x^T F x <= bound`,
/// the origin included. Order: `x0` ascending, then `x1`, then `x2`.
pub fn for_each_in_ellipsoid<T: Scalar>(
    form: &[[T; 3]; 3],
    bound: &T,
    mut visit: impl FnMut(&[T; 3], &T),
) {
    if bound.is_negative() {
        return;
    }
    let f = form;
    let adj = adjugate3(f);
    let det = f[0][0].clone() * adj[0][0].clone()
        + f[0][1].clone() * adj[1][0].clone()
        + f[0][2].clone() * adj[2][0].clone();
    assert!(det.is_positive(), "form is not positive definite");
    let zero = T::zero();
    let one = T::one();
    let two = T::from_i64_exact(2);

    let Some((x0lo, x0hi)) = quad_interval(&det, &zero, &(-(bound.clone() * adj[0][0].clone())))
    else {
        return;
    };

    let f22 = f[2][2].clone();
    // Coefficients after eliminating x2 (Schur complement, scaled by f22).
    let a1 = f22.clone() * f[1][1].clone() - f[1][2].clone() * f[1][2].clone();
    let b1c = f22.clone() * f[0][1].clone() - f[0][2].clone() * f[1][2].clone();
    let c1c = f22.clone() * f[0][0].clone() - f[0][2].clone() * f[0][2].clone();
    let k22 = f22.clone() * bound.clone();

    let mut x0 = x0lo;
    while x0 <= x0hi {
        let b1 = b1c.clone() * x0.clone();
        let c1 = c1c.clone() * x0.clone() * x0.clone() - k22.clone();
        if let Some((x1lo, x1hi)) = quad_interval(&a1, &b1, &c1) {
            let mut x1 = x1lo;
            while x1 <= x1hi {
                let b2 = f[0][2].clone() * x0.clone() + f[1][2].clone() * x1.clone();
                let q01 = f[0][0].clone() * x0.clone() * x0.clone()
                    + two.clone() * f[0][1].clone() * x0.clone() * x1.clone()
                    + f[1][1].clone() * x1.clone() * x1.clone();
                if let Some((x2lo, x2hi)) = quad_interval(&f22, &b2, &(q01.clone() - bound.clone())) {
                    let mut x2 = x2lo;
                    while x2 <= x2hi {
                        let value = q01.clone()
                            + two.clone() * b2.clone() * x2.clone()
                            + f22.clone() * x2.clone() * x2.clone();
                        debug_assert!(value <= *bound);
                        visit(&[x0.clone(), x1.clone(), x2.clone()], &value);
                        x2 = x2 + one.clone();
                    }
                }
                x1 = x1 + one.clone();
            }
        }
        x0 = x0 + one.clone();
    }
}

pub fn form_value<T: Scalar>(form: &[[T; 3]; 3], x: &[T; 3]) -> T {
    let mut acc = T::zero();
    for i in 0..3 {
        for j in 0..3 {
            acc = acc + form[i][j].clone() * x[i].clone() * x[j].clone();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_roots() {
        // x^2 - 4 <= 0
        assert_eq!(quad_interval(&1i64, &0, &-4), Some((-2, 2)));
        // 3x^2 + 2x - 1 <= 0 -> x in [-1, 1/3]
        assert_eq!(quad_interval(&3i64, &1, &-1), Some((-1, 0)));
        // (x - 0.5)^2 <= 0.01 scaled: 100x^2 - 100x + 24 <= 0 -> [0.4, 0.6]
        assert_eq!(quad_interval(&100i64, &-50, &24), None);
        assert_eq!(quad_interval(&1i64, &0, &1), None);
    }

    #[test]
    fn matches_box_scan() {
        let form = [[5i64, 2, -1], [2, 3, 1], [-1, 1, 4]];
        for bound in [0i64, 3, 10, 37] {
            let mut got = Vec::new();
            for_each_in_ellipsoid(&form, &bound, |x, v| {
                assert_eq!(*v, form_value(&form, x));
                got.push(*x);
            });
            let mut want = Vec::new();
            for a in -10..=10 {
                for b in -10..=10 {
                    for c in -10..=10 {
                        if form_value(&form, &[a, b, c]) <= bound {
                            want.push([a, b, c]);
                        }
                    }
                }
            }
            assert_eq!(got, want);
        }
    }
}
