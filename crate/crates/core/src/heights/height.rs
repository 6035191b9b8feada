// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::exactlin::{dot, kernel_basis};
use crate::heights::binary::{restrict_to_line, PointClass};
use crate::heights::nonsplit::maximal_order_norm;
use crate::heights::split::{rational_roots, to_space};
use crate::hilb::{ideal_lattice, HilbPoint};
use crate::scalar::Scalar;

fn ratio_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Squared covolume of `I_Z(e)`.
pub fn height_e_sq<T: Scalar>(z: &HilbPoint<T>, e: u32) -> BigInt {
    match e {
        1 => z.covol2_i1().to_bigint(),
        2 => z.covol2_i2().to_bigint(),
        _ => ideal_lattice(z, e).covol2().clone(),
    }
}

/// Covolume of `I_Z(e)`.
pub fn height_e<T: Scalar>(z: &HilbPoint<T>, e: u32) -> f64 {
    height_e_sq(z, e).to_f64().unwrap_or(f64::INFINITY).sqrt()
}

/// `covol(I1)^(s-t) covol(I2)^t`, for any real `s, t`.
pub fn height_st<T: Scalar>(z: &HilbPoint<T>, s: f64, t: f64) -> f64 {
    crate::query::height_st(z.covol2_i1().to_f64_lossy(), z.covol2_i2().to_f64_lossy(), s, t)
}

/// A height with its exact square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactHeight {
    pub squared: BigRational,
}

impl ExactHeight {
    pub fn value(&self) -> f64 {
        ratio_f64(&self.squared).sqrt()
    }

    /// The height itself when it is rational.
    pub fn exact(&self) -> Option<BigRational> {
        let n = self.squared.numer();
        let d = self.squared.denom();
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (rn.clone() * rn.clone() == *n && rd.clone() * rd.clone() == *d)
            .then(|| BigRational::new(rn, rd))
    }
}

/// The Le Rudulier height `H_Le`.
pub fn le_height<T: Scalar>(z: &HilbPoint<T>) -> ExactHeight {
    let form = restrict_to_line(z);
    let disc = form.disc();
    let (e, f) = kernel_basis(z.ell());
    let big = |x: T| x.to_bigint();
    let squared = match PointClass::of_disc(&disc) {
        PointClass::Nonreduced => {
            let root = if form.a.is_zero() {
                [T::one(), T::zero()]
            } else {
                let r = [-form.b.clone(), T::from_i64_exact(2) * form.a.clone()];
                let g = r[0].gcd(&r[1]);
                [r[0].clone() / g.clone(), r[1].clone() / g]
            };
            let v = to_space(&root, &e, &f);
            let n = big(dot(&v, &v));
            BigRational::from_integer(n.clone() * n)
        }
        PointClass::Split => {
            let (r1, r2) = rational_roots(&form);
            let v = to_space(&r1, &e, &f);
            let w = to_space(&r2, &e, &f);
            BigRational::from_integer(big(dot(&v, &v)) * big(dot(&w, &w)))
        }
        PointClass::Nonsplit => {
            // v = P + R sqrt D with P = -B e + 2A f, R = e
            let two_a = T::from_i64_exact(2) * form.a.clone();
            let p: [BigInt; 3] = std::array::from_fn(|i| {
                big(-form.b.clone() * e[i].clone() + two_a.clone() * f[i].clone())
            });
            let r: [BigInt; 3] = std::array::from_fn(|i| big(e[i].clone()));
            let d = big(disc);
            nonsplit_le_squared(&p, &r, &d)
        }
    };
    ExactHeight { squared }
}

/// `(|i1(v)| |i2(v)| / N(I(v)))^2` for `v = P + R sqrt D`.
pub(crate) fn nonsplit_le_squared(p: &[BigInt; 3], r: &[BigInt; 3], d: &BigInt) -> BigRational {
    let pp = dot(p, p);
    let rr = dot(r, r);
    let pr = dot(p, r);
    let prod = if d.is_positive() {
        let s = pp + d.clone() * rr;
        s.clone() * s - BigInt::from(4) * d.clone() * pr.clone() * pr
    } else {
        let s = pp - d.clone() * rr;
        s.clone() * s
    };
    let gens: Vec<(BigInt, BigInt)> = (0..3).map(|i| (p[i].clone(), r[i].clone())).collect();
    let n = maximal_order_norm(&gens, d);
    BigRational::new(prod, n.clone() * n)
}

/// `|Disc(Z)| covol(I1)^4 / covol(I2)^2`
pub fn disc_ratio<T: Scalar>(z: &HilbPoint<T>) -> BigRational {
    let d = restrict_to_line(z).disc().abs().to_bigint();
    let l2 = z.covol2_i1().to_bigint();
    BigRational::new(d * l2.clone() * l2, z.covol2_i2().to_bigint())
}

/// `H_Le^3 / H_{0,3}`
pub fn le_anticanonical_ratio<T: Scalar>(z: &HilbPoint<T>) -> f64 {
    le_height(z).value().powi(3) / height_st(z, 0.0, 3.0)
}
