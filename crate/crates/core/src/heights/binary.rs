// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::exactlin::kernel_basis;
use crate::hilb::{eval, HilbPoint};
use crate::scalar::{gcd_slice, is_perfect_square, Scalar};

/// `A S^2 + B S T + C T^2`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryQuadraticForm<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> BinaryQuadraticForm<T> {
    pub fn disc(&self) -> T {
        self.b.clone() * self.b.clone() - T::from_i64_exact(4) * self.a.clone() * self.c.clone()
    }

    pub fn eval(&self, s: &T, t: &T) -> T {
        self.a.clone() * s.clone() * s.clone()
            + self.b.clone() * s.clone() * t.clone()
            + self.c.clone() * t.clone() * t.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointClass {
    Nonreduced,
    Split,
    Nonsplit,
}

impl PointClass {
    pub fn of_disc<T: Scalar>(d: &T) -> Self {
        if d.is_zero() {
            PointClass::Nonreduced
        } else if is_perfect_square(d) {
            PointClass::Split
        } else {
            PointClass::Nonsplit
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PointClass::Nonreduced => "nonreduced",
            PointClass::Split => "split",
            PointClass::Nonsplit => "nonsplit",
        }
    }
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn add3<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> [T; 3] {
    std::array::from_fn(|i| u[i].clone() + v[i].clone())
}

pub(crate) fn comb3<T: Scalar>(s: &T, e: &[T; 3], t: &T, f: &[T; 3]) -> [T; 3] {
    std::array::from_fn(|i| s.clone() * e[i].clone() + t.clone() * f[i].clone())
}

/// `q(S e + T f)` for an explicit basis, normalised to content one and
/// leading sign positive.
pub fn restrict_with_basis<T: Scalar>(z: &HilbPoint<T>, e: &[T; 3], f: &[T; 3]) -> BinaryQuadraticForm<T> {
    let q = z.q_lift();
    let a = eval(q, 2, e);
    let c = eval(q, 2, f);
    let b = eval(q, 2, &add3(e, f)) - a.clone() - c.clone();
    let mut v = [a, b, c];
    let g = gcd_slice(&v);
    assert!(!g.is_zero(), "q vanishes on the line l = 0 for {z:?}");
    assert!(g.is_one(), "restricted form has content {g} for {z:?}");
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -x.clone();
        }
    }
    let [a, b, c] = v;
    BinaryQuadraticForm { a, b, c }
}

/// Restriction of `q` to the line `l = 0` in the HNF kernel basis.
pub fn restrict_to_line<T: Scalar>(z: &HilbPoint<T>) -> BinaryQuadraticForm<T> {
    let (e, f) = kernel_basis(z.ell());
    restrict_with_basis(z, &e, &f)
}

pub fn discriminant<T: Scalar>(z: &HilbPoint<T>) -> T {
    restrict_to_line(z).disc()
}

pub fn classify<T: Scalar>(z: &HilbPoint<T>) -> PointClass {
    PointClass::of_disc(&discriminant(z))
}
