// SPDX-License-Identifier: Apache-2.0

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::SuiteReport;
use crate::exactlin::adjugate3;
use crate::lattice::reduce::size_reduce;
use crate::lattice::{count_primitive, log_star, successive_minima, LinearForm, QuotientLattice};
use crate::scalar::{is_sign_canonical, Scalar};

const SAMPLE: usize = 100;
const COEFF_MAX: i64 = 50;
const RADII: [i128; 3] = [5, 10, 20];
/// Largest admissible error constant.
pub const GON_C_MAX: f64 = 50.0;

/// `SAMPLE` distinct primitive sign-canonical forms with coefficients in
/// `[-50, 50]`, drawn from a ChaCha stream seeded by `seed`.
pub fn gon_sample(seed: u64) -> Vec<LinearForm<i128>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<LinearForm<i128>> = Vec::with_capacity(SAMPLE);
    while out.len() < SAMPLE {
        let v: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-COEFF_MAX..=COEFF_MAX));
        if !is_sign_canonical(&v) || v[0].gcd(&v[1]).gcd(&v[2]) != 1 {
            continue;
        }
        let l = LinearForm::from_i64(v[0], v[1], v[2]).expect("canonical");
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

fn form_value(g: &[[i128; 3]; 3], x: &[i128; 3]) -> i128 {
    (0..3).map(|i| (0..3).map(|j| x[i] * g[i][j] * x[j]).sum::<i128>()).sum()
}

/// Primitive `x` with `x^T form x * den < p * num`, counted by a box scan in
/// a size-reduced basis.
pub fn reduced_count_primitive(form: &[[i128; 3]; 3], p: i128, r2: &Ratio<i128>) -> u64 {
    let (_, g) = size_reduce(form);
    let adj = adjugate3(&g);
    let det: i128 = (0..3).map(|j| g[0][j] * adj[j][0]).sum();
    let limit = p * r2.numer();
    let den = *r2.denom();
    // x_i^2 <= value * (G^{-1})_{ii}
    let half: [i128; 3] = std::array::from_fn(|i| (limit * adj[i][i] / (den * det)).sqrt() + 1);
    let mut n = 0;
    for x0 in -half[0]..=half[0] {
        for x1 in -half[1]..=half[1] {
            for x2 in -half[2]..=half[2] {
                let x = [x0, x1, x2];
                if x0.gcd(&x1).gcd(&x2) == 1 && form_value(&g, &x) * den < limit {
                    n += 1;
                }
            }
        }
    }
    n
}

struct Sample {
    checked: u64,
    fails: Vec<String>,
    c_needed: f64,
}

pub(super) fn gon(report: &mut SuiteReport, seed: u64) {
    let forms = gon_sample(seed);
    let samples: Vec<Sample> = forms
        .par_iter()
        .map(|l| {
            let q = QuotientLattice::new(l);
            let p = *q.product_covol2();
            let sm = successive_minima(&q);
            let [l1, l2, l3] = sm.lambda_f64();
            let covol = 1.0 / (p as f64).sqrt();
            let cube = p.cbrt().max(1);
            let mut out = Sample { checked: 0, fails: Vec::new(), c_needed: 0.0 };
            for r in RADII {
                // radius normalised by P^{1/6} so that counts stay comparable
                let r2 = Ratio::new(r * r, cube);
                let radius = (r2.numer().to_f64_lossy() / r2.denom().to_f64_lossy()).sqrt();
                let n = count_primitive(&q, &r2);
                let m = reduced_count_primitive(q.form(), p, &r2);
                out.checked += 1;
                if n != m {
                    out.fails.push(format!("{l:?}, R^2 = {r2}: {n} vs {m}"));
                }
                let main = q.gon_main_term(radius);
                let envelope = (l2 * l3 * radius * log_star(radius / l1) + l3 * radius * radius) / covol;
                out.c_needed = out.c_needed.max((n as f64 - main).abs() / envelope);
            }
            out
        })
        .collect();
    let c = samples.iter().map(|s| s.c_needed).fold(0.0, f64::max);
    for s in samples {
        report.checked += s.checked;
        for f in s.fails {
            report.fail(f);
        }
    }
    report.check(c <= GON_C_MAX, || format!("calibrated constant {c} exceeds {GON_C_MAX}"));
    report.metric("lattices", forms.len() as u64);
    report.metric("calibrated_c", c);
    report.metric("c_max", GON_C_MAX);
}
