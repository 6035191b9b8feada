// SPDX-License-Identifier: Apache-2.0

use hilb2::exactlin::{gram_det2, hnf, IntMatrix};
use hilb2::lattice::{quotient, sl_polynomial, successive_minima, LinearForm};
use num_rational::Ratio;
use proptest::prelude::*;

fn primitive_form() -> impl Strategy<Value = LinearForm<i128>> {
    (-12i64..=12, -12i64..=12, -12i64..=12)
        .prop_filter_map("primitive", |(a, b, c)| LinearForm::<i128>::from_i64(a, b, c).ok())
}

fn unimodular() -> impl Strategy<Value = IntMatrix<i128>> {
    proptest::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..8).prop_map(|ops| {
        let mut m = IntMatrix::<i128>::identity(3);
        for (i, j, k) in ops {
            if i != j {
                for c in 0..3 {
                    let v = *m.get(i, c) + (k as i128) * *m.get(j, c);
                    m.set(i, c, v);
                }
            }
        }
        m
    })
}

proptest! {
    #[test]
    fn covolume_matches_closed_form(l in primitive_form()) {
        let basis = l.product_basis();
        let [a, b, c] = l.coeffs();
        prop_assert_eq!(gram_det2(&basis).unwrap(), sl_polynomial(&a, &b, &c));
    }

    #[test]
    fn covolume_is_basis_invariant(l in primitive_form(), u in unimodular()) {
        let basis = l.product_basis();
        let moved = u.mul(&basis).unwrap();
        prop_assert_eq!(gram_det2(&moved).unwrap(), gram_det2(&basis).unwrap());
        prop_assert_eq!(hnf(&moved).unwrap(), hnf(&basis).unwrap());
    }

    #[test]
    fn covolume_scales_with_multiples(l in primitive_form(), k in 2i128..5) {
        let [a, b, c] = l.coeffs();
        let scaled = sl_polynomial(&(k * a), &(k * b), &(k * c));
        prop_assert_eq!(scaled, k.pow(6) * sl_polynomial(&a, &b, &c));
    }

    #[test]
    fn quotient_covolume_identity(l in primitive_form()) {
        let q = quotient(&l);
        let [a, b, c] = l.coeffs();
        let p = sl_polynomial(&a, &b, &c);
        prop_assert_eq!(q.covol2() * Ratio::from_integer(p), Ratio::from_integer(1));
    }
}

fn brute_minima(l: &LinearForm<i128>, r: i128) -> Vec<Ratio<i128>> {
    let q = quotient(l);
    let mut vals = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            for z in -r..=r {
                if (x, y, z) != (0, 0, 0) {
                    vals.push((q.norm2(&[x, y, z]), [x, y, z]));
                }
            }
        }
    }
    vals.sort();
    let mut chosen: Vec<[i128; 3]> = Vec::new();
    let mut out = Vec::new();
    for (v, x) in vals {
        let independent = match chosen.len() {
            0 => true,
            1 => hilb2::exactlin::cross(&chosen[0], &x) != [0, 0, 0],
            _ => {
                let n = hilb2::exactlin::cross(&chosen[0], &chosen[1]);
                n[0] * x[0] + n[1] * x[1] + n[2] * x[2] != 0
            }
        };
        if independent {
            chosen.push(x);
            out.push(v);
            if out.len() == 3 {
                break;
            }
        }
    }
    out
}

#[test]
fn minima_agree_with_box_search() {
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in 0i64..=3 {
                let Ok(l) = LinearForm::<i128>::from_i64(a, b, c) else { continue };
                let m = successive_minima(&quotient(&l));
                let brute = brute_minima(&l, 6);
                assert_eq!(m.lambda_sq.to_vec(), brute, "l = {l}");
            }
        }
    }
}
