// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::Result;
use crate::hilb::point::HilbPoint;
use crate::lattice::{for_each_in_ellipsoid, sl_polynomial, LinearForm, QuotientLattice};
use crate::query::CountQuery;
use crate::scalar::{gcd_slice, is_sign_canonical, Scalar};

/// All primitive sign-canonical `(a, b, c)` with `max(|a|,|b|,|c|) <= m_max`,
/// in lexicographic order.
pub fn canonical_forms<T: Scalar>(m_max: u64) -> Vec<LinearForm<T>> {
    let m = m_max as i64;
    let mut out = Vec::new();
    for a in 0..=m {
        for b in -m..=m {
            for c in -m..=m {
                let v = [a, b, c];
                if is_sign_canonical(&v) && gcd_slice(&v) == 1 {
                    out.push(LinearForm::from_i64(a, b, c).expect("canonical"));
                }
            }
        }
    }
    out
}

/// Points over `quot.source()` with `covol2(I2) <= cmax`, ordered by `qbar`.
pub fn fiber_points<T: Scalar>(quot: &QuotientLattice<T>, cmax: &T) -> Vec<HilbPoint<T>> {
    let mut out = Vec::new();
    for_each_in_ellipsoid(quot.form(), cmax, |x, _| {
        if is_sign_canonical(x) && gcd_slice(x).is_one() {
            out.push(HilbPoint::from_canonical_coset(quot, x.clone()));
        }
    });
    out
}

/// Number of points over `quot.source()` with `covol2(I2) <= cmax`.
pub fn fiber_count_scaled<T: Scalar>(quot: &QuotientLattice<T>, cmax: &T) -> u64 {
    let mut n = 0u64;
    for_each_in_ellipsoid(quot.form(), cmax, |x, _| {
        if is_sign_canonical(x) && gcd_slice(x).is_one() {
            n += 1;
        }
    });
    n
}

/// Number of `Lambda_2` over `l` with `covol(Lambda_2) <= Y`, given `Y^2`.
pub fn fiber_count<T: Scalar>(l: &LinearForm<T>, y_sq: &Ratio<T>) -> u64 {
    let cmax = y_sq.floor().to_integer();
    fiber_count_scaled(&QuotientLattice::new(l), &cmax)
}

/// The `covol2(I2)` cap for `l` under `query`, or `None` when `l` cannot
/// carry any point (the cap lies below the fiber's proven floor).
fn fiber_cap<T: Scalar>(query: &CountQuery, l: &LinearForm<T>) -> Option<T> {
    let ell2 = l.norm2().to_bigint();
    let cap = query.max_covol2(&ell2)?;
    // covol2(I2) >= P / (49 M^4)
    let p = sl_polynomial(l.a(), l.b(), l.c()).to_bigint();
    let m4 = l.m().to_bigint().pow(4u32);
    if cap.clone() * BigInt::from(49) * m4 < p {
        return None;
    }
    Some(T::from_bigint(&cap).expect("covolume cap fits the scalar type"))
}

fn assert_floor<T: Scalar>(l: &LinearForm<T>, quot: &QuotientLattice<T>, pts: &[HilbPoint<T>]) {
    let m2 = l.m() * l.m();
    let floor_scale = T::from_i64_exact(49) * m2.clone() * m2;
    for p in pts {
        assert!(
            p.covol2_i2().clone() * floor_scale.clone() >= *quot.product_covol2(),
            "fiber floor violated at {p:?}"
        );
    }
}

/// Every point with `H_{s,t} <= B`, ordered by `l` then `qbar`.
pub fn enumerate_points<T: Scalar>(query: &CountQuery) -> Vec<HilbPoint<T>> {
    let forms = canonical_forms::<T>(query.m_max());
    let fibers: Vec<Vec<HilbPoint<T>>> = forms
        .par_iter()
        .map(|l| match fiber_cap(query, l) {
            Some(cap) => {
                let quot = QuotientLattice::new(l);
                let pts = fiber_points(&quot, &cap);
                assert_floor(l, &quot, &pts);
                pts
            }
            None => Vec::new(),
        })
        .collect();
    fibers.into_iter().flatten().collect()
}

/// Sequential visitor over the same points and order as [`enumerate_points`].
pub fn for_each_point<T: Scalar>(query: &CountQuery, mut visit: impl FnMut(&HilbPoint<T>)) {
    for l in canonical_forms::<T>(query.m_max()) {
        if let Some(cap) = fiber_cap(query, &l) {
            let quot = QuotientLattice::new(&l);
            for p in fiber_points(&quot, &cap) {
                visit(&p);
            }
        }
    }
}

/// `N_{s,t}(B)`: the number of points with `H_{s,t} <= B`.
pub fn count_nst<T: Scalar>(query: &CountQuery) -> u64 {
    canonical_forms::<T>(query.m_max())
        .par_iter()
        .map(|l| match fiber_cap(query, l) {
            Some(cap) => fiber_count_scaled(&QuotientLattice::new(l), &cap),
            None => 0,
        })
        .sum()
}

/// Per-form fiber counts, for forms with a nonempty fiber.
pub fn fiber_counts<T: Scalar>(query: &CountQuery) -> Vec<(LinearForm<T>, u64)> {
    canonical_forms::<T>(query.m_max())
        .par_iter()
        .filter_map(|l| {
            let cap = fiber_cap(query, l)?;
            let n = fiber_count_scaled(&QuotientLattice::new(l), &cap);
            (n > 0).then(|| (l.clone(), n))
        })
        .collect()
}

pub fn parse_and_count(s: &str, t: &str, b: &str) -> Result<u64> {
    Ok(count_nst::<i128>(&CountQuery::parse(s, t, b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_fiber() {
        let l = LinearForm::<i128>::from_i64(1, 0, 0).unwrap();
        assert_eq!(fiber_count(&l, &Ratio::new(9, 4)), 9);
        assert_eq!(fiber_count(&l, &Ratio::from_integer(1)), 3);
        assert_eq!(fiber_count(&l, &Ratio::new(1, 2)), 0);
        let quot = QuotientLattice::new(&l);
        assert_eq!(fiber_points(&quot, &4).len(), 13);
    }

    #[test]
    fn empty_below_one() {
        assert_eq!(parse_and_count("2", "1", "0.99").unwrap(), 0);
    }

    #[test]
    fn form_counts() {
        // primitive canonical triples in [-1,1]^3: 26 / 2
        assert_eq!(canonical_forms::<i64>(1).len(), 13);
    }

    #[test]
    fn scaling_law() {
        let q = CountQuery::parse("2", "1", "6").unwrap();
        let n = count_nst::<i128>(&q);
        assert_eq!(count_nst::<i128>(&q.scaled(2).unwrap()), n);
        assert_eq!(enumerate_points::<i128>(&q).len() as u64, n);
    }
}
