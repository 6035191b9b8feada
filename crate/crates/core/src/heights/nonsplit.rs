// SPDX-License-Identifier: Apache-2.0


use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, smith_minor_gcd, IntMatrix};
use crate::heights::binary::{comb3, restrict_to_line, PointClass};
use crate::hilb::{eval, HilbPoint};
use crate::scalar::{gcd_slice, Scalar};

/// Parameters of an algebraic solution `v = (g + alpha sqrt D) e + beta sqrt D f`
/// of `l = q = 0`, with `(e, f)` a basis of the integer kernel of `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonsplitParams<T> {
    pub g: T,
    pub alpha: T,
    pub beta: T,
    pub disc: T,
    pub e: [T; 3],
    pub f: [T; 3],
}

impl<T: Scalar> NonsplitParams<T> {
    /// Rational and irrational parts `(P, R)` of `v = P + R sqrt D`.
    pub fn solution_parts(&self) -> ([T; 3], [T; 3]) {
        let p = comb3(&self.g, &self.e, &T::zero(), &self.f);
        let r = comb3(&self.alpha, &self.e, &self.beta, &self.f);
        (p, r)
    }
}

pub fn nonsplit_params<T: Scalar>(z: &HilbPoint<T>) -> Result<NonsplitParams<T>> {
    let form = restrict_to_line(z);
    let disc = form.disc();
    if PointClass::of_disc(&disc) != PointClass::Nonsplit {
        return Err(Error::WrongClass("nonsplit"));
    }
    let (e0, f0) = kernel_basis(z.ell());
    // Root direction (S : T) = (-B + sqrt D : 2A); A != 0 for a nonsquare disc.
    let two_a = T::from_i64_exact(2) * form.a.clone();
    let g = form.b.gcd(&two_a);
    let x = -form.b.clone() / g.clone();
    let y = two_a / g.clone();
    // Complete (x, y) to a unimodular matrix [[x, y], [u, w]].
    let eg = x.extended_gcd(&(-y.clone()));
    let (mut w, mut u) = (eg.x, eg.y);
    if eg.gcd.is_negative() {
        w = -w;
        u = -u;
    }
    debug_assert!((x.clone() * w.clone() - y.clone() * u.clone()).is_one());
    let e = comb3(&x, &e0, &y, &f0);
    let mut f = comb3(&u, &e0, &w, &f0);
    // e0 = w e - y f
    let mut alpha = w;
    let mut beta = -y;
    if beta.is_negative() {
        beta = -beta;
        f = f.map(|c| -c);
    }
    let k = alpha.div_floor(&beta);
    if !k.is_zero() {
        alpha = alpha - k.clone() * beta.clone();
        f = comb3(&T::one(), &f, &k, &e);
    }
    let params = NonsplitParams { g, alpha, beta, disc, e, f };
    assert!(solves(z, &params), "reconstructed solution fails for {z:?}");
    Ok(params)
}

/// Check `l(v) = 0` and `q(v) = 0` for `v = P + R sqrt D` exactly.
pub(crate) fn solves<T: Scalar>(z: &HilbPoint<T>, p: &NonsplitParams<T>) -> bool {
    let (rp, ri) = p.solution_parts();
    if !z.ell().eval(&rp).is_zero() || !z.ell().eval(&ri).is_zero() {
        return false;
    }
    // q(P + R sqrt D) = q(P) + D q(R) + sqrt D (q(P + R) - q(P) - q(R))
    let q = z.q_lift();
    let qp = eval(q, 2, &rp);
    let qr = eval(q, 2, &ri);
    let sum: [T; 3] = std::array::from_fn(|i| rp[i].clone() + ri[i].clone());
    let qs = eval(q, 2, &sum);
    (qp.clone() + p.disc.clone() * qr.clone()).is_zero() && (qs - qp - qr).is_zero()
}

/// `4 beta^2 g^2 D / gcd(beta^2 D, 2 alpha beta D, g^2 - alpha^2 D)^2`
pub fn disc_nonsplit<T: Scalar>(p: &NonsplitParams<T>) -> T {
    let (g, a, b, d) = (&p.g, &p.alpha, &p.beta, &p.disc);
    let two = T::from_i64_exact(2);
    let h = gcd_slice(&[
        b.clone() * b.clone() * d.clone(),
        two.clone() * a.clone() * b.clone() * d.clone(),
        g.clone() * g.clone() - a.clone() * a.clone() * d.clone(),
    ]);
    assert!(!h.is_zero());
    two.clone() * two * b.clone() * b.clone() * g.clone() * g.clone() * d.clone() / (h.clone() * h)
}

/// Index of the ideal `(g + alpha sqrt D, beta sqrt D)` in `Z[sqrt D]`.
pub fn ideal_norm<T: Scalar>(p: &NonsplitParams<T>) -> T {
    let (g, a, b, d) = (&p.g, &p.alpha, &p.beta, &p.disc);
    let z = T::zero();
    // Columns: the two generators and their products with sqrt D.
    let cols = IntMatrix::from_rows(&[
        vec![g.clone(), a.clone() * d.clone(), z.clone(), b.clone() * d.clone()],
        vec![a.clone(), g.clone(), b.clone(), z],
    ])
    .expect("2x4");
    let n = smith_minor_gcd(&cols, 2).expect("ideal has finite index");
    let closed = gcd_slice(&[
        b.clone() * b.clone() * d.clone(),
        a.clone() * b.clone() * d.clone(),
        g.clone() * g.clone() - a.clone() * a.clone() * d.clone(),
        b.clone() * g.clone(),
    ]);
    assert_eq!(n, closed, "ideal norm disagrees with its closed form");
    n
}

/// `D = f^2 d_K` with `d_K` a fundamental discriminant. `D` must be a
/// nonsquare discriminant (`D = 0, 1 mod 4`).
pub fn fundamental_decomposition<T: Scalar>(d: &T) -> (T, T) {
    let mut rest = d.abs();
    let mut square = T::one();
    let mut p = T::from_i64_exact(2);
    while p.clone() * p.clone() <= rest {
        let pp = p.clone() * p.clone();
        while (rest.clone() % pp.clone()).is_zero() {
            rest = rest / pp.clone();
            square = square * p.clone();
        }
        p = p + T::one();
    }
    let m = if d.is_negative() { -rest } else { rest };
    let four = T::from_i64_exact(4);
    let dk = if m.mod_floor(&four).is_one() {
        m
    } else {
        four.clone() * m
    };
    let f2 = d.clone() / dk.clone();
    let f = f2.sqrt();
    assert!(f.clone() * f.clone() == f2, "{d} is not a discriminant");
    (dk, f)
}

/// Norm in the maximal order of `Q(sqrt D)` of the ideal generated by the
/// elements `p_j + r_j sqrt D`.
pub fn maximal_order_norm<T: Scalar>(gens: &[(T, T)], d: &T) -> T {
    let (dk, f) = fundamental_decomposition(d);
    maximal_order_norm_with(gens, &dk, &f)
}

pub(crate) fn maximal_order_norm_with<T: Scalar>(gens: &[(T, T)], dk: &T, f: &T) -> T {
    let two = T::from_i64_exact(2);
    let c = (dk.clone() * dk.clone() - dk.clone()) / T::from_i64_exact(4);
    let mut top = Vec::with_capacity(gens.len() * 2);
    let mut bottom = Vec::with_capacity(gens.len() * 2);
    for (p, r) in gens {
        // sqrt D = f (2 omega - d_K)
        let x = p.clone() - r.clone() * f.clone() * dk.clone();
        let y = two.clone() * r.clone() * f.clone();
        top.push(x.clone());
        bottom.push(y.clone());
        // (x + y omega) omega = -y c + (x + y d_K) omega
        top.push(-(y.clone() * c.clone()));
        bottom.push(x + y * dk.clone());
    }
    let m = IntMatrix::from_rows(&[top, bottom]).expect("2 x 2n");
    smith_minor_gcd(&m, 2).expect("nonzero ideal")
}
