// SPDX-License-Identifier: Apache-2.0

//! Counting points by the Le Rudulier height.
//!
//! Split points are unordered pairs of distinct primitive vectors `{v, w}`
//! with `|v|^2 |w|^2 <= B^2`. For a nonsplit point over `l`, with restricted
//! form `(A, B, C)` in a kernel basis `(e, f)` of Gram matrix
//! `[[E, F], [F, G]]`, put `tau = C E - B F + A G`. The ideal generated by the
//! coordinates of the solution `(-B + sqrt D) e + 2A f` has norm `4|A|` in the
//! maximal order, which gives
//!
//! ```text
//! H_Le^2 = tau^2 + D |l|^2   (D > 0)
//! H_Le^2 = tau^2             (D < 0)
//! ```
//!
//! Both cases imply `|D| |l|^2 <= H_Le^2` and `|tau| <= H_Le`, and the
//! relative eigenvalues of the form against the Gram matrix are then at most
//! `(1 + sqrt 2) H_Le / (2 |l|^2)` in absolute value. That bounds `A`, `B`, `C`.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::constants::le_rudulier_constant;
use crate::exactlin::kernel_basis;
use crate::hilb::canonical_forms;
use crate::lattice::LinearForm;
use crate::scalar::is_perfect_square;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeCount {
    pub b: f64,
    pub split: u64,
    pub nonsplit: u64,
    pub total: u64,
}

impl LeCount {
    /// `total / (c B log B)` with the published Le Rudulier constant.
    pub fn ratio_to(&self, x: f64) -> f64 {
        self.total as f64 / (le_rudulier_constant() * x * x.ln())
    }
}

fn floor_sq(b: &BigRational) -> i128 {
    (b.clone() * b.clone()).floor().to_integer().to_i128().expect("B^2 fits in i128")
}

/// Number of sign-canonical primitive vectors of each squared norm `<= k`.
fn norm_tally(k: i64) -> Vec<u64> {
    let mut c = vec![0u64; k as usize + 1];
    let r = (k as f64).sqrt() as i64 + 1;
    for a in 0..=r {
        for b in -r..=r {
            let ab = a * a + b * b;
            if ab > k {
                continue;
            }
            for cc in -r..=r {
                let n = ab + cc * cc;
                if n == 0 || n > k {
                    continue;
                }
                let canonical = a > 0 || (a == 0 && (b > 0 || (b == 0 && cc > 0)));
                if canonical && a.gcd(&b).gcd(&cc) == 1 {
                    c[n as usize] += 1;
                }
            }
        }
    }
    c
}

/// Split points with `|v| |w| <= B`, given `k = floor(B^2)`.
fn split_count(k: i64) -> u64 {
    if k < 1 {
        return 0;
    }
    let c = norm_tally(k);
    let mut cum = vec![0u64; c.len()];
    let mut run = 0u64;
    for (i, v) in c.iter().enumerate() {
        run += v;
        cum[i] = run;
    }
    let ordered: u64 = (1..=k).map(|n| c[n as usize] * cum[(k / n) as usize]).sum();
    let diagonal = cum[num_integer::Roots::sqrt(&k) as usize];
    (ordered - diagonal) / 2
}

/// Gauss-reduced basis of the kernel of `l` and its Gram entries.
fn reduced_kernel(l: &LinearForm<i64>) -> ([i64; 3], [i64; 3]) {
    let (mut e, mut f) = kernel_basis(l);
    let dot = |u: &[i64; 3], v: &[i64; 3]| u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    loop {
        if dot(&e, &e) > dot(&f, &f) {
            std::mem::swap(&mut e, &mut f);
        }
        let num = dot(&e, &f);
        let den = dot(&e, &e);
        let k = Integer::div_floor(&(2 * num + den), &(2 * den));
        if k == 0 {
            return (e, f);
        }
        f = [f[0] - k * e[0], f[1] - k * e[1], f[2] - k * e[2]];
        if dot(&f, &f) >= dot(&e, &e) {
            return (e, f);
        }
    }
}

/// Exact squared Le Rudulier height of the nonsplit point over `l` whose
/// restricted form is `(a, b, c)` in the basis with Gram `(ee, ef, ff)`.
pub(crate) fn nonsplit_height_sq(a: i128, b: i128, c: i128, gram: (i128, i128, i128), l2: i128) -> i128 {
    let (ee, ef, ff) = gram;
    let d = b * b - 4 * a * c;
    let tau = c * ee - b * ef + a * ff;
    if d > 0 {
        tau * tau + d * l2
    } else {
        tau * tau
    }
}

fn nonsplit_fiber(l: &LinearForm<i64>, k: i128, mu: f64) -> u64 {
    let (e, f) = reduced_kernel(l);
    let dot = |u: &[i64; 3], v: &[i64; 3]| (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) as i128;
    let (ee, ef, ff) = (dot(&e, &e), dot(&e, &f), dot(&f, &f));
    let l2 = l.norm2() as i128;
    let scale = mu / l2 as f64;
    let a_max = (scale * ee as f64).floor() as i128 + 1;
    let c_max = (scale * ff as f64).floor() as i128 + 1;
    let b_max = (2.0 * scale * ((ee * ff) as f64).sqrt()).floor() as i128 + 1;
    let x = (k as f64).sqrt() + 1.0;
    let mut n = 0u64;
    for a in 1..=a_max {
        for c in -c_max..=c_max {
            if c == 0 {
                continue;
            }
            // |tau| <= x restricts b when ef != 0
            let (mut lo, mut hi) = (-b_max, b_max);
            if ef != 0 {
                let centre = (c * ee + a * ff) as f64 / ef as f64;
                let half = x / (ef.abs() as f64);
                lo = lo.max((centre - half).floor() as i128 - 1);
                hi = hi.min((centre + half).ceil() as i128 + 1);
            } else if ((c * ee + a * ff) as f64).abs() > x {
                continue;
            }
            for b in lo..=hi {
                let d = b * b - 4 * a * c;
                if is_perfect_square(&d) {
                    continue;
                }
                if nonsplit_height_sq(a, b, c, (ee, ef, ff), l2) > k {
                    continue;
                }
                if a.gcd(&b).gcd(&c) == 1 {
                    n += 1;
                }
            }
        }
    }
    n
}

fn nonsplit_count(k: i128) -> u64 {
    if k < 3 {
        return 0;
    }
    let x = (k as f64).sqrt();
    let mu = 0.5 * (1.0 + 2f64.sqrt()) * x * (1.0 + 1e-9) + 1e-9;
    // |l|^2 <= B^2 / 3
    let m = ((k / 3) as f64).sqrt().floor() as u64;
    canonical_forms::<i64>(m)
        .par_iter()
        .filter(|l| 3 * l.norm2() as i128 <= k)
        .map(|l| nonsplit_fiber(l, k, mu))
        .sum()
}

/// Number of points off the nonreduced locus with `H_Le <= B`.
pub fn le_count(b: &BigRational) -> LeCount {
    count_up_to_sq(floor_sq(b), b.to_f64().unwrap_or(f64::NAN))
}

fn count_up_to_sq(k: i128, b: f64) -> LeCount {
    let split = split_count(i64::try_from(k).expect("B^2 fits in i64"));
    let nonsplit = nonsplit_count(k);
    LeCount {
        b,
        split,
        nonsplit,
        total: split + nonsplit,
    }
}

pub fn le_count_f64(b: f64) -> LeCount {
    le_count(&crate::query::rational_from_f64(b).expect("finite B"))
}

/// Points with `H_Le^3 <= X`, the anticanonical normalisation. Since
/// `H_Le^2` is an integer this is `H_Le^2 <= k` with `k^3 <= X^2 < (k+1)^3`.
pub fn le_count_anticanonical(x: &BigRational) -> LeCount {
    let x2 = (x.clone() * x.clone()).floor().to_integer();
    let k = x2.cbrt().to_i128().expect("X^(2/3) fits in i128");
    count_up_to_sq(k, x.to_f64().unwrap_or(f64::NAN))
}

pub fn le_count_anticanonical_f64(x: f64) -> LeCount {
    le_count_anticanonical(&crate::query::rational_from_f64(x).expect("finite X"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_height() {
        // three coordinate points give three pairs; no nonsplit point has H_Le = 1
        let c = le_count_f64(1.0);
        assert_eq!((c.split, c.nonsplit), (3, 0));
    }

    #[test]
    fn tally_small() {
        let c = norm_tally(3);
        assert_eq!(&c[1..], &[3, 6, 4]);
    }

    #[test]
    fn reduced_basis_spans_kernel() {
        let l = LinearForm::<i64>::from_i64(3, -7, 11).unwrap();
        let (e, f) = reduced_kernel(&l);
        let cr = crate::exactlin::cross(&e, &f);
        assert!(cr == l.coeffs() || cr == l.coeffs().map(|x| -x));
    }
}
