// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::json;

use super::oracle::naive_count;
use super::SuiteReport;
use crate::constants::pi_sq_bracket;
use crate::exactlin::gram_det2;
use crate::heights::{
    classify, disc_nonsplit, disc_ratio, disc_split_gcd, discriminant, le_height, nonsplit_params, split_solutions,
    PointClass,
};
use crate::hilb::{canonical_forms, canonicalize, count_nst, enumerate_points, HilbPoint, QuadraticForm};
use crate::lattice::{sl_polynomial, successive_minima, LinearForm, QuotientLattice};
use crate::query::CountQuery;
use crate::scalar::Scalar;

fn big(r: &Ratio<i128>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn ratio_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Collect per-item failure lists in input order.
fn absorb(report: &mut SuiteReport, per_item: Vec<(u64, Vec<String>)>) {
    for (checked, fails) in per_item {
        report.checked += checked;
        for f in fails {
            report.fail(f);
        }
    }
}

pub(super) fn sl_formula(report: &mut SuiteReport, m: u64) {
    let forms = canonical_forms::<i128>(m);
    let results: Vec<(u64, Vec<String>)> = forms
        .par_iter()
        .map(|l| {
            let mut fails = Vec::new();
            let p = sl_polynomial(l.a(), l.b(), l.c());
            let gram = gram_det2(&l.product_basis()).expect("rank 3");
            if gram != p {
                fails.push(format!("{l:?}: polynomial {p} vs gram {gram}"));
            }
            let n = l.norm2();
            let n3 = n * n * n;
            if !(2 * n3 <= 3 * p && p <= n3) {
                fails.push(format!("{l:?}: sandwich fails for covol2 {p}, |l|^2 {n}"));
            }
            (2, fails)
        })
        .collect();
    report.metric("forms", forms.len() as u64);
    report.metric("m_max", m);
    absorb(report, results);
}

pub(super) fn minkowski(report: &mut SuiteReport, m: u64) {
    let (pi2_lo, pi2_hi) = pi_sq_bracket();
    let one = BigRational::one();
    let thirty_six = BigRational::from_integer(36.into());
    let forms = canonical_forms::<i128>(m);
    let results: Vec<(u64, Vec<String>, f64, f64, f64)> = forms
        .par_iter()
        .map(|l| {
            let q = QuotientLattice::new(l);
            let sm = successive_minima(&q);
            let p = *q.product_covol2();
            let mm = l.m();
            let mut fails = Vec::new();
            let [l1, _, l3] = sm.lambda_sq.clone();
            if l3 > Ratio::one() {
                fails.push(format!("{l:?}: lambda_3^2 = {l3} > 1"));
            }
            let floor = l1 * Ratio::from_integer(49 * mm * mm * mm * mm);
            if floor < Ratio::one() {
                fails.push(format!("{l:?}: lambda_1^2 below 1/(49 M^4)"));
            }
            // prod lambda_i^2 * P * pi^2 lies in [1, 36]
            let prod = big(&sm.lambda_sq[0]) * big(&sm.lambda_sq[1]) * big(&sm.lambda_sq[2]) * BigRational::from_integer(p.into());
            let lo = &prod * &pi2_lo;
            let hi = &prod * &pi2_hi;
            if lo < one || hi > thirty_six {
                fails.push(format!("{l:?}: Minkowski product {} outside [1, 36]", ratio_f64(&lo)));
            }
            (3, fails, ratio_f64(&lo), ratio_f64(&hi), ratio_f64(&big(&floor)))
        })
        .collect();
    let min_prod = results.iter().map(|r| r.2).fold(f64::INFINITY, f64::min);
    let max_prod = results.iter().map(|r| r.3).fold(0.0, f64::max);
    let min_floor = results.iter().map(|r| r.4).fold(f64::INFINITY, f64::min);
    absorb(report, results.into_iter().map(|r| (r.0, r.1)).collect());

    let best: Vec<(u64, Vec<String>)> = (2..=m as i128)
        .into_par_iter()
        .map(|k| {
            let l = LinearForm::new(k, k - 1, 0).expect("primitive");
            let sm = successive_minima(&QuotientLattice::new(&l));
            let cap = Ratio::new(1, (k * k - k) * (k * k - k));
            let fails = if sm.lambda_sq[0] > cap {
                vec![format!("{l:?}: lambda_1^2 = {} exceeds {cap}", sm.lambda_sq[0])]
            } else {
                Vec::new()
            };
            (1, fails)
        })
        .collect();
    absorb(report, best);
    report.metric("forms", forms.len() as u64);
    report.metric("m_max", m);
    report.metric("minkowski_product_min", min_prod);
    report.metric("minkowski_product_max", max_prod);
    report.metric("lambda1_sq_times_49m4_min", min_floor);
}

pub(super) fn minima(report: &mut SuiteReport, m: u64, half_box: i128) {
    let forms = canonical_forms::<i128>(m);
    let side = (2 * half_box + 1) as usize;
    let total = side.pow(6);
    let results: Vec<(u64, Vec<String>, f64)> = forms
        .par_iter()
        .map(|l| {
            let q = QuotientLattice::new(l);
            let p = *q.product_covol2();
            let mm = l.m();
            let m4 = 49 * mm * mm * mm * mm;
            let mut fails = Vec::new();
            let mut checked = 0u64;
            let mut worst = f64::INFINITY;
            for idx in 0..total {
                let mut rest = idx;
                let x: [i128; 6] = std::array::from_fn(|_| {
                    let d = (rest % side) as i128 - half_box;
                    rest /= side;
                    d
                });
                let bar = q.coset_coords(&x);
                if bar.iter().all(Zero::is_zero) {
                    continue;
                }
                checked += 1;
                let scaled = q.scaled_norm2(&bar);
                worst = worst.min((scaled * m4) as f64 / p as f64);
                if scaled * m4 < p && fails.len() < 3 {
                    fails.push(format!("{l:?}: dist^2 of {x:?} is {scaled}/{p}"));
                }
            }
            (checked, fails, worst)
        })
        .collect();
    let worst = results.iter().map(|r| r.2).fold(f64::INFINITY, f64::min);
    absorb(report, results.into_iter().map(|r| (r.0, r.1)).collect());
    report.metric("forms", forms.len() as u64);
    report.metric("m_max", m);
    report.metric("box", half_box as u64);
    report.metric("min_dist2_times_49m4", worst);
}

fn points_up_to(h21: u64) -> Vec<HilbPoint<i128>> {
    let query = CountQuery::parse("2", "1", &h21.to_string()).expect("valid query");
    enumerate_points::<i128>(&query)
}

pub(super) fn disc_agreement(report: &mut SuiteReport, h21: u64) {
    let pts = points_up_to(h21);
    let results: Vec<(u64, Vec<String>, PointClass)> = pts
        .par_iter()
        .map(|z| {
            let d = discriminant(z);
            let class = classify(z);
            let mut fails = Vec::new();
            if !matches!(d.rem_euclid(4), 0 | 1) {
                fails.push(format!("{z:?}: discriminant {d} not 0 or 1 mod 4"));
            }
            let other = match class {
                PointClass::Nonreduced => 0,
                PointClass::Split => disc_split_gcd(&split_solutions(z).expect("split")),
                PointClass::Nonsplit => disc_nonsplit(&nonsplit_params(z).expect("nonsplit")),
            };
            if other != d {
                fails.push(format!("{z:?}: {} formula gives {other}, restriction gives {d}", class.name()));
            }
            (2, fails, class)
        })
        .collect();
    let tally = |c: PointClass| results.iter().filter(|r| r.2 == c).count() as u64;
    report.metric("points", pts.len() as u64);
    report.metric("h21_max", h21);
    report.metric("split", tally(PointClass::Split));
    report.metric("nonsplit", tally(PointClass::Nonsplit));
    report.metric("nonreduced", tally(PointClass::Nonreduced));
    absorb(report, results.into_iter().map(|r| (r.0, r.1)).collect());
}

pub(super) fn disc_bound(report: &mut SuiteReport, h21: u64, family: i128) {
    let pts = points_up_to(h21);
    let four = BigRational::from_integer(4.into());
    let ratios: Vec<BigRational> = pts.par_iter().map(disc_ratio).collect();
    let mut max = BigRational::zero();
    for (z, r) in pts.iter().zip(&ratios) {
        report.check(*r <= four, || format!("{z:?}: disc ratio {r} > 4"));
        if *r > max {
            max = r.clone();
        }
    }
    for k in 1..=family {
        let z = canonicalize([0, 0, 1], &QuadraticForm::new([1, 0, 0, -k * k, 0, 0]).expect("nonzero")).expect("valid");
        let r = disc_ratio(&z);
        let want = BigRational::new((4 * k * k).into(), (k * k * k * k + 1).into());
        report.check(r == want, || format!("k = {k}: ratio {r}, expected {want}"));
    }
    report.metric("points", pts.len() as u64);
    report.metric("h21_max", h21);
    report.metric("max_ratio", ratio_f64(&max));
    report.metric("max_ratio_exact", max.to_string());
}

pub(super) fn za_family(report: &mut SuiteReport, a_max: i128) {
    let q = QuadraticForm::new([1, 0, -6, 0, 0, 9]).expect("nonzero");
    let fourteen = BigRational::from_integer(14.into());
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    for a in 1..=a_max {
        let z = canonicalize([a, -1, 2 - 3 * a], &q).expect("valid point");
        let i1 = 10 * a * a - 12 * a + 5;
        let i2 = 2526 * a * a - 3204 * a + 1266;
        report.check(z.covol2_i1() == i1, || format!("a = {a}: covol2 I(1) = {}, expected {i1}", z.covol2_i1()));
        report.check(*z.covol2_i2() == i2, || format!("a = {a}: covol2 I(2) = {}, expected {i2}", z.covol2_i2()));
        let h = le_height(&z).exact();
        report.check(h.as_ref() == Some(&fourteen), || format!("a = {a}: H_Le = {h:?}"));
        let h03 = (z.covol2_i2().to_f64_lossy() / z.covol2_i1().to_f64_lossy()).powf(1.5);
        let ratio = 14f64.powi(3) / h03;
        lo = lo.min(ratio);
        hi = hi.max(ratio);
        report.check((0.68..=1.0).contains(&ratio), || format!("a = {a}: H_Le^3 / H_03 = {ratio}"));
    }
    report.metric("a_max", a_max as u64);
    report.metric("ratio_min", lo);
    report.metric("ratio_max", hi);
}

/// Exponent pairs and bounds compared against the naive oracle.
pub const ORACLE_PAIRS: [(u32, u32); 3] = [(2, 1), (3, 1), (3, 2)];
pub const ORACLE_BOUNDS: [u64; 6] = [1, 2, 5, 10, 20, 30];

pub(super) fn oracle_count(report: &mut SuiteReport) {
    for (s, t) in ORACLE_PAIRS {
        for b in ORACLE_BOUNDS {
            let query = CountQuery::parse(&s.to_string(), &t.to_string(), &b.to_string()).expect("valid");
            let fast = count_nst::<i128>(&query);
            let naive = naive_count(s, t, b).expect("oracle range");
            report.check(fast == naive, || format!("(s,t,B) = ({s},{t},{b}): {fast} vs oracle {naive}"));
            report.metric(&format!("N({s},{t},{b})"), json!(fast));
        }
    }
}
