// SPDX-License-Identifier: Apache-2.0

//! A brute-force point counter that shares no enumeration code with
//! [`crate::hilb`]. Cosets of `S(1) * l` are parametrised by binary
//! quadratic forms on the line `l = 0`, and `covol2(I(2))` is taken directly
//! from a Gram determinant.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilb::{canonicalize, QuadraticForm};

type V3 = [i128; 3];

fn dot3(u: &V3, v: &V3) -> i128 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cross3(u: &V3, v: &V3) -> V3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// Coefficients of `(u . X)(v . X)` in the monomial order of `S(2)`.
fn lin_product(u: &V3, v: &V3) -> [i128; 6] {
    [
        u[0] * v[0],
        u[0] * v[1] + u[1] * v[0],
        u[0] * v[2] + u[2] * v[0],
        u[1] * v[1],
        u[1] * v[2] + u[2] * v[1],
        u[2] * v[2],
    ]
}

/// Values of the six monomials at `v`.
fn monomial_values(v: &V3) -> [i128; 6] {
    [v[0] * v[0], v[0] * v[1], v[0] * v[2], v[1] * v[1], v[1] * v[2], v[2] * v[2]]
}

/// Values of the six monomials under the polarisation `m(e + f) - m(e) - m(f)`.
fn polar_values(e: &V3, f: &V3) -> [i128; 6] {
    [
        2 * e[0] * f[0],
        e[0] * f[1] + e[1] * f[0],
        e[0] * f[2] + e[2] * f[0],
        2 * e[1] * f[1],
        e[1] * f[2] + e[2] * f[1],
        2 * e[2] * f[2],
    ]
}

fn norm6(v: &[i128; 6]) -> i128 {
    v.iter().map(|x| x * x).sum()
}

/// Fraction-free determinant of a small square matrix.
fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn gram_det(rows: &[[i128; 6]]) -> i128 {
    let g = rows
        .iter()
        .map(|u| rows.iter().map(|v| u.iter().zip(v).map(|(a, b)| a * b).sum()).collect())
        .collect();
    bareiss(g)
}

/// Columns `g, e, f` of a unimodular matrix with `l(g) = 1` and
/// `l(e) = l(f) = 0`, with `(e, f)` Lagrange-reduced.
fn completion(l: &V3) -> (V3, V3, V3) {
    let mut v = *l;
    let mut cols = [[1i128, 0, 0], [0, 1, 0], [0, 0, 1]];
    loop {
        let nonzero: Vec<usize> = (0..3).filter(|&i| v[i] != 0).collect();
        if nonzero.len() == 1 {
            break;
        }
        let i = *nonzero.iter().min_by_key(|&&i| v[i].abs()).unwrap();
        for &j in &nonzero {
            if j != i {
                let q = Integer::div_floor(&v[j], &v[i]);
                v[j] -= q * v[i];
                let ci = cols[i];
                for (x, y) in cols[j].iter_mut().zip(ci) {
                    *x -= q * y;
                }
            }
        }
    }
    let i = (0..3).find(|&i| v[i] != 0).unwrap();
    let mut g = cols[i];
    if v[i] < 0 {
        g = g.map(|x| -x);
    }
    let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
    let (mut e, mut f) = (cols[others[0]], cols[others[1]]);
    loop {
        if dot3(&f, &f) < dot3(&e, &e) {
            std::mem::swap(&mut e, &mut f);
        }
        let ee = dot3(&e, &e);
        let k = Integer::div_floor(&(2 * dot3(&e, &f) + ee), &(2 * ee));
        if k == 0 {
            break;
        }
        for (x, y) in f.iter_mut().zip(e) {
            *x -= k * y;
        }
    }
    (g, e, f)
}

/// `N_{s,t}(B)` by exhaustive search, for integers `s > t > 0` and `B >= 1`.
pub fn naive_count(s: u32, t: u32, b: u64) -> Result<u64> {
    if t == 0 || s <= t {
        return Err(Error::Invalid("the oracle needs integers s > t > 0".into()));
    }
    let b2 = BigInt::from(b) * BigInt::from(b);
    // covol2(I(2)) >= 1 gives |l|^{2(s-t)} <= B^2
    let ell2_max = b2.nth_root(s - t);
    let m = i128::try_from(ell2_max.sqrt()).map_err(|_| Error::Invalid("B too large".into()))?;
    let mut forms = Vec::new();
    for a in 0..=m {
        for bb in -m..=m {
            for c in -m..=m {
                let canonical = a > 0 || (a == 0 && (bb > 0 || (bb == 0 && c > 0)));
                if canonical && a.gcd(&bb).gcd(&c) == 1 && BigInt::from(a * a + bb * bb + c * c) <= ell2_max {
                    forms.push([a, bb, c]);
                }
            }
        }
    }
    Ok(forms.par_iter().map(|l| fiber(l, s, t, &b2)).sum())
}

/// Points over the primitive form `l` with `H_{s,t} <= B`, by exhaustive search.
pub fn naive_fiber_count(l: [i128; 3], s: u32, t: u32, b: u64) -> u64 {
    let b2 = BigInt::from(b) * BigInt::from(b);
    fiber(&l, s, t, &b2)
}

fn fiber(l: &V3, s: u32, t: u32, b2: &BigInt) -> u64 {
    let ell2 = dot3(l, l);
    let lhs = BigInt::from(ell2).pow(s - t);
    if &lhs > b2 {
        return 0;
    }
    let cap = i128::try_from((b2 / &lhs).nth_root(t)).expect("covolume cap fits i128");
    let [a, b, c] = *l;
    let v_rows = [[a, b, c, 0, 0, 0], [0, a, 0, b, c, 0], [0, 0, a, 0, b, c]];
    let p = gram_det(&v_rows);
    let (g, e, f) = completion(l);
    let det = dot3(&g, &cross3(&e, &f));
    assert_eq!(det.abs(), 1, "completion is unimodular");
    let phi = cross3(&f, &g).map(|x| x * det);
    let psi = cross3(&g, &e).map(|x| x * det);
    let (pp, ps, ss) = (lin_product(&phi, &phi), lin_product(&phi, &psi), lin_product(&psi, &psi));
    // |q(e)|, |q(f)| and the polar value are bounded by |q mod V| times the
    // norm of the corresponding evaluation vector.
    let am = (cap * norm6(&monomial_values(&e)) / p).sqrt();
    let bm = (cap * norm6(&polar_values(&e, &f)) / p).sqrt();
    let cm = (cap * norm6(&monomial_values(&f)) / p).sqrt();
    let ell_pow = BigInt::from(ell2).pow(s - t);
    let mut seen = HashSet::new();
    for qa in -am..=am {
        for qb in -bm..=bm {
            for qc in -cm..=cm {
                if qa.gcd(&qb).gcd(&qc) != 1 {
                    continue;
                }
                let q: [i128; 6] = std::array::from_fn(|i| qa * pp[i] + qb * ps[i] + qc * ss[i]);
                let c2 = gram_det(&[v_rows[0], v_rows[1], v_rows[2], q]);
                if c2 > cap || &ell_pow * BigInt::from(c2).pow(t) > *b2 {
                    continue;
                }
                let form = QuadraticForm::new(q).expect("nonzero");
                let z = canonicalize(*l, &form).expect("primitive coset");
                assert_eq!(*z.covol2_i2(), c2, "covolume disagreement at {z:?}");
                seen.insert(z);
            }
        }
    }
    seen.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion_is_unimodular() {
        for l in [[1i128, 0, 0], [0, 0, 1], [3, 5, 7], [6, -10, 15], [0, 4, -9]] {
            let (g, e, f) = completion(&l);
            assert_eq!(dot3(&l, &g), 1);
            assert_eq!((dot3(&l, &e), dot3(&l, &f)), (0, 0));
            assert_eq!(dot3(&g, &cross3(&e, &f)).abs(), 1);
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(naive_count(2, 1, 1).unwrap(), 9);
        assert!(naive_count(1, 1, 5).is_err());
    }
}
