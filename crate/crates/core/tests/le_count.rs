// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;

use hilb2::asymptotics::{le_count_anticanonical_f64, le_count_f64};
use hilb2::exactlin::{adjugate3, det3, kernel_basis};
use hilb2::heights::{classify, le_height, restrict_to_line, PointClass};
use hilb2::hilb::{canonical_forms, canonicalize, QuadraticForm};
use hilb2::lattice::LinearForm;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

fn dot(u: &[i128; 3], v: &[i128; 3]) -> i128 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// Coefficients of the product of two linear forms.
fn lin_product(u: &[i128; 3], v: &[i128; 3]) -> [i128; 6] {
    [
        u[0] * v[0],
        u[0] * v[1] + u[1] * v[0],
        u[0] * v[2] + u[2] * v[0],
        u[1] * v[1],
        u[1] * v[2] + u[2] * v[1],
        u[2] * v[2],
    ]
}

/// Linear forms phi, psi with phi(e)=1, phi(f)=0, psi(e)=0, psi(f)=1.
fn dual_forms(l: &LinearForm<i128>, e: &[i128; 3], f: &[i128; 3]) -> ([i128; 3], [i128; 3]) {
    let c = l.coeffs();
    let g1 = c[0].extended_gcd(&c[1]);
    let g2 = g1.gcd.extended_gcd(&c[2]);
    let g = [g1.x * g2.x, g1.y * g2.x, g2.y];
    assert_eq!(dot(&c, &g), 1);
    let m = [*e, *f, g];
    let d = det3(&m);
    assert_eq!(d.abs(), 1);
    let adj = adjugate3(&m);
    // inverse = adj / d; column j of the inverse pairs with row j of m.
    let phi = [adj[0][0] * d, adj[1][0] * d, adj[2][0] * d];
    let psi = [adj[0][1] * d, adj[1][1] * d, adj[2][1] * d];
    assert_eq!((dot(e, &phi), dot(f, &phi), dot(e, &psi), dot(f, &psi)), (1, 0, 0, 1));
    (phi, psi)
}

fn oracle(b: i128) -> (u64, u64) {
    let k = b * b;
    // split: brute-force pairs
    let r = b as i64;
    let mut vecs = Vec::new();
    for x in 0..=r {
        for y in -r..=r {
            for z in -r..=r {
                let canon = x > 0 || (x == 0 && (y > 0 || (y == 0 && z > 0)));
                let n = (x * x + y * y + z * z) as i128;
                if canon && n <= k && x.gcd(&y).gcd(&z) == 1 {
                    vecs.push(n);
                }
            }
        }
    }
    let mut split = 0u64;
    for i in 0..vecs.len() {
        for j in i + 1..vecs.len() {
            if vecs[i] * vecs[j] <= k {
                split += 1;
            }
        }
    }
    // nonsplit: scan binary forms over every admissible line
    let kb = BigRational::from_integer(BigInt::from(k));
    let mu = 1.3 * b as f64;
    let m = ((k / 3) as f64).sqrt() as u64;
    let mut seen = HashSet::new();
    for l in canonical_forms::<i128>(m) {
        if 3 * l.norm2() > k {
            continue;
        }
        let (e, f) = kernel_basis(&l);
        let (phi, psi) = dual_forms(&l, &e, &f);
        let l2 = l.norm2() as f64;
        let am = (mu * dot(&e, &e) as f64 / l2) as i128 + 1;
        let cm = (mu * dot(&f, &f) as f64 / l2) as i128 + 1;
        let bm = (2.0 * mu * ((dot(&e, &e) * dot(&f, &f)) as f64).sqrt() / l2) as i128 + 1;
        let pp = lin_product(&phi, &phi);
        let ps = lin_product(&phi, &psi);
        let ss = lin_product(&psi, &psi);
        for a in -am..=am {
            for bb in -bm..=bm {
                for c in -cm..=cm {
                    if a.gcd(&bb).gcd(&c) != 1 {
                        continue;
                    }
                    let q: [i128; 6] = std::array::from_fn(|i| a * pp[i] + bb * ps[i] + c * ss[i]);
                    let z = canonicalize(l.coeffs(), &QuadraticForm::new(q).unwrap()).unwrap();
                    if classify(&z) != PointClass::Nonsplit {
                        continue;
                    }
                    if le_height(&z).squared <= kb {
                        seen.insert(z);
                    }
                }
            }
        }
    }
    (split, seen.len() as u64)
}

#[test]
fn le_count_matches_brute_force() {
    for b in 1..=6i128 {
        let got = le_count_f64(b as f64);
        let (split, nonsplit) = oracle(b);
        assert_eq!((got.split, got.nonsplit), (split, nonsplit), "B = {b}");
    }
}

#[test]
fn closed_form_nonsplit_height() {
    // tau^2 + D |l|^2 (or tau^2) against the ideal-norm route
    for l in canonical_forms::<i128>(2) {
        let (e, f) = kernel_basis(&l);
        let (phi, psi) = dual_forms(&l, &e, &f);
        let (ee, ef, ff) = (dot(&e, &e), dot(&e, &f), dot(&f, &f));
        for a in 1..=4i128 {
            for bb in -4..=4i128 {
                for c in -4..=4i128 {
                    if a.gcd(&bb).gcd(&c) != 1 {
                        continue;
                    }
                    let q: [i128; 6] = std::array::from_fn(|i| {
                        a * lin_product(&phi, &phi)[i] + bb * lin_product(&phi, &psi)[i] + c * lin_product(&psi, &psi)[i]
                    });
                    let z = canonicalize(l.coeffs(), &QuadraticForm::new(q).unwrap()).unwrap();
                    if classify(&z) != PointClass::Nonsplit {
                        continue;
                    }
                    let form = restrict_to_line(&z);
                    assert_eq!((form.a, form.b, form.c), (a, bb, c));
                    let d = bb * bb - 4 * a * c;
                    let tau = c * ee - bb * ef + a * ff;
                    let want = if d > 0 { tau * tau + d * l.norm2() } else { tau * tau };
                    assert_eq!(le_height(&z).squared, BigRational::from_integer(BigInt::from(want)));
                }
            }
        }
    }
}

#[test]
fn anticanonical_normalisation() {
    let a = le_count_anticanonical_f64(27.0);
    let b = le_count_f64(3.0);
    assert_eq!(a.total, b.total);
}

#[test]
fn anticanonical_bound_is_exact() {
    // X = 10^6 means H_Le^2 <= 10^4 exactly
    assert_eq!(le_count_anticanonical_f64(1.0e6).total, le_count_f64(100.0).total);
    assert_eq!(le_count_anticanonical_f64(63.9).total, le_count_f64(3.9).total);
}
