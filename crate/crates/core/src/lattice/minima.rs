// SPDX-License-Identifier: Apache-2.0

use num_rational::Ratio;

use crate::exactlin::{cross, det3};
use crate::lattice::ellipsoid::for_each_in_ellipsoid;
use crate::lattice::quotient::QuotientLattice;
use crate::lattice::ellipsoid::quad_interval;
use crate::lattice::reduce::{combine, congruent, size_reduce};
use crate::scalar::{is_sign_canonical, sign_canonical, Scalar};

/// Exact squared successive minima of a quotient lattice with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessiveMinima<T: Scalar> {
    pub lambda_sq: [Ratio<T>; 3],
    pub witnesses: [[T; 3]; 3],
}

impl<T: Scalar> SuccessiveMinima<T> {
    pub fn lambda_f64(&self) -> [f64; 3] {
        std::array::from_fn(|i| {
            let r = &self.lambda_sq[i];
            (r.numer().to_f64_lossy() / r.denom().to_f64_lossy()).sqrt()
        })
    }
}

fn independent_of<T: Scalar>(chosen: &[[T; 3]], v: &[T; 3]) -> bool {
    match chosen.len() {
        0 => v.iter().any(|x| !x.is_zero()),
        1 => cross(&chosen[0], v).iter().any(|x| !x.is_zero()),
        2 => !det3(&[chosen[0].clone(), chosen[1].clone(), v.clone()]).is_zero(),
        _ => false,
    }
}

/// Successive minima by exact enumeration.
///
/// The first two minima come from an ellipsoid search in a size-reduced
/// basis whose bound starts near the volume-predicted scale and grows by a
/// factor four; since `lambda_3 <= 1` it never needs to exceed `P`. The two
/// minimal vectors form a basis of the lattice points in their plane, so the
/// third minimum is found layer by layer over that plane.
///
/// Witnesses are sign-canonical; ties are broken by the smallest vector in
/// lexicographic order.
pub fn successive_minima<T: Scalar>(q: &QuotientLattice<T>) -> SuccessiveMinima<T> {
    let p = q.product_covol2().clone();
    let [(n1, v1), (n2, v2)] = two_minima(q.form(), &p);
    let (n3, v3) = third_minimum(q.form(), &v1, &v2);
    SuccessiveMinima {
        lambda_sq: [Ratio::new(n1, p.clone()), Ratio::new(n2, p.clone()), Ratio::new(n3, p)],
        witnesses: [v1, v2, v3],
    }
}

fn two_minima<T: Scalar>(form: &[[T; 3]; 3], p: &T) -> [(T, [T; 3]); 2] {
    let (basis, gram) = size_reduce(form);
    let guess = p.to_f64_lossy().powf(2.0 / 3.0).floor().max(1.0);
    let mut bound = T::from_f64(guess).unwrap_or_else(|| p.clone()).min(p.clone());
    loop {
        let mut pts: Vec<(T, [T; 3])> = Vec::new();
        for_each_in_ellipsoid(&gram, &bound, |y, v| {
            let x = combine(y, &basis);
            if is_sign_canonical(&x) {
                pts.push((v.clone(), x));
            }
        });
        pts.sort();
        let mut chosen: Vec<(T, [T; 3])> = Vec::with_capacity(2);
        for (v, x) in pts {
            let xs: Vec<[T; 3]> = chosen.iter().map(|c| c.1.clone()).collect();
            if independent_of(&xs, &x) {
                chosen.push((v, x));
                if chosen.len() == 2 {
                    let second = chosen.pop().expect("two");
                    let first = chosen.pop().expect("one");
                    return [first, second];
                }
            }
        }
        assert!(bound < *p, "second minimum exceeds 1");
        bound = (bound * T::from_i64_exact(4)).min(p.clone());
    }
}

/// `w` with `n . w = 1` for a primitive `n`.
fn unimodular_partner<T: Scalar>(n: &[T; 3]) -> [T; 3] {
    let e1 = n[0].extended_gcd(&n[1]);
    let e2 = e1.gcd.extended_gcd(&n[2]);
    assert!(e2.gcd.is_one(), "normal vector is primitive");
    [e1.x * e2.x.clone(), e1.y * e2.x, e2.y]
}

fn third_minimum<T: Scalar>(form: &[[T; 3]; 3], v1: &[T; 3], v2: &[T; 3]) -> (T, [T; 3]) {
    let b = [v1.clone(), v2.clone(), unimodular_partner(&cross(v1, v2))];
    let h = congruent(form, &b);
    let (a11, a12, a13) = (h[0][0].clone(), h[0][1].clone(), h[0][2].clone());
    let (a22, a23, a33) = (h[1][1].clone(), h[1][2].clone(), h[2][2].clone());
    let d2 = a11.clone() * a22.clone() - a12.clone() * a12.clone();
    let d3 = det3(&h);
    let two = T::from_i64_exact(2);
    let value = |y1: &T, y2: &T, k: &T| -> T {
        let y = [y1.clone(), y2.clone(), k.clone()];
        (0..3).fold(T::zero(), |acc, i| {
            (0..3).fold(acc, |acc, j| acc + y[i].clone() * h[i][j].clone() * y[j].clone())
        })
    };

    // Babai seed in layer 1: the real minimiser rounded every way
    let one = T::one();
    let c1 = -(a22.clone() * a13.clone() - a12.clone() * a23.clone());
    let c2 = -(a11.clone() * a23.clone() - a12.clone() * a13.clone());
    let (f1, f2) = (c1.div_floor(&d2), c2.div_floor(&d2));
    let mut best = value(&f1, &f2, &one);
    for (y1, y2) in [
        (f1.clone() + one.clone(), f2.clone()),
        (f1.clone(), f2.clone() + one.clone()),
        (f1.clone() + one.clone(), f2.clone() + one.clone()),
    ] {
        best = best.min(value(&y1, &y2, &one));
    }

    let mut found: Vec<(T, [T; 3])> = Vec::new();
    let mut k = one.clone();
    // layer k lies at squared height k^2 d3 / d2 above the plane
    while k.clone() * k.clone() * d3.clone() <= best.clone() * d2.clone() {
        let kk = k.clone() * k.clone();
        let rows = quad_interval(
            &d2,
            &(k.clone() * (a11.clone() * a23.clone() - a12.clone() * a13.clone())),
            &(kk.clone() * (a11.clone() * a33.clone() - a13.clone() * a13.clone()) - a11.clone() * best.clone()),
        );
        if let Some((lo, hi)) = rows {
            let mut y2 = lo;
            while y2 <= hi {
                let cols = quad_interval(
                    &a11,
                    &(a12.clone() * y2.clone() + k.clone() * a13.clone()),
                    &(a22.clone() * y2.clone() * y2.clone()
                        + two.clone() * k.clone() * a23.clone() * y2.clone()
                        + kk.clone() * a33.clone()
                        - best.clone()),
                );
                if let Some((lo1, hi1)) = cols {
                    let mut y1 = lo1;
                    while y1 <= hi1 {
                        let v = value(&y1, &y2, &k);
                        let mut x = combine(&[y1.clone(), y2.clone(), k.clone()], &b);
                        sign_canonical(&mut x);
                        found.push((v, x));
                        y1 = y1 + one.clone();
                    }
                }
                y2 = y2 + one.clone();
            }
        }
        if let Some(m) = found.iter().map(|f| f.0.clone()).min() {
            best = best.min(m);
        }
        k = k + one.clone();
    }
    found.into_iter().min().expect("the seed lies in layer one")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LinearForm;

    #[test]
    fn axis_minima_are_one() {
        let q = QuotientLattice::new(&LinearForm::<i128>::from_i64(1, 0, 0).unwrap());
        let m = successive_minima(&q);
        assert_eq!(m.lambda_sq, [Ratio::from_integer(1), Ratio::from_integer(1), Ratio::from_integer(1)]);
    }

    #[test]
    fn best_bounds_example() {
        let q = QuotientLattice::new(&LinearForm::<i128>::from_i64(2, 1, 0).unwrap());
        let m = successive_minima(&q);
        assert!(m.lambda_sq[0] <= Ratio::new(1, 4));
        assert!(m.lambda_sq[0] >= Ratio::new(1, 784));
        assert!(m.lambda_sq[0] <= m.lambda_sq[1] && m.lambda_sq[1] <= m.lambda_sq[2]);
        for (w, l) in m.witnesses.iter().zip(&m.lambda_sq) {
            assert_eq!(q.norm2(w), *l);
        }
    }
}
