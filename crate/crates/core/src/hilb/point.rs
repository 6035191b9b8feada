// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::error::{Error, Result};
use crate::hilb::poly::QuadraticForm;
use crate::lattice::{LinearForm, QuotientLattice};
use crate::scalar::{gcd_slice, sign_canonical, Scalar};

/// A point of `Hilb^2(P^2)(Z)`: a linear form and the canonical coordinates
/// of a primitive coset of quadratic forms modulo `S(1) * l`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HilbPoint<T: Scalar> {
    ell: LinearForm<T>,
    qbar: [T; 3],
    q_lift: [T; 6],
    covol2: T,
}

impl<T: Scalar> HilbPoint<T> {
    /// Build from coset coordinates in `quot`. The coordinates are
    /// sign-normalised; zero and imprimitive cosets are rejected.
    pub fn from_coset(quot: &QuotientLattice<T>, mut qbar: [T; 3]) -> Result<Self> {
        let g = gcd_slice(&qbar);
        if g.is_zero() {
            return Err(Error::QInSpan);
        }
        if !g.is_one() {
            return Err(Error::NonPrimitiveLambda2);
        }
        sign_canonical(&mut qbar);
        Ok(Self::from_canonical_coset(quot, qbar))
    }

    /// Caller guarantees `qbar` is primitive and sign-canonical.
    pub(crate) fn from_canonical_coset(quot: &QuotientLattice<T>, qbar: [T; 3]) -> Self {
        let q_lift = quot.lift(&qbar);
        let covol2 = quot.scaled_norm2(&qbar);
        Self {
            ell: quot.source().clone(),
            qbar,
            q_lift,
            covol2,
        }
    }

    /// Reduce a quadratic form modulo `S(1) * l` where `quot` belongs to `l`.
    pub fn from_form(quot: &QuotientLattice<T>, q: &[T; 6]) -> Result<Self> {
        Self::from_coset(quot, quot.coset_coords(q))
    }

    pub fn ell(&self) -> &LinearForm<T> {
        &self.ell
    }

    pub fn qbar(&self) -> &[T; 3] {
        &self.qbar
    }

    /// Short representative of the quadratic form in monomial coordinates.
    pub fn q_lift(&self) -> &[T; 6] {
        &self.q_lift
    }

    /// Squared covolume of `I(1)`.
    pub fn covol2_i1(&self) -> T {
        self.ell.norm2()
    }

    /// Squared covolume of `I(2)`.
    pub fn covol2_i2(&self) -> &T {
        &self.covol2
    }

    pub fn quadratic_form(&self) -> QuadraticForm<T> {
        QuadraticForm::new(self.q_lift.clone()).expect("primitive coset has a nonzero lift")
    }

    pub fn convert<U: Scalar>(&self) -> HilbPoint<U> {
        let f = |x: &T| U::from_bigint(&x.to_bigint()).expect("value fits target scalar");
        HilbPoint {
            ell: self.ell.convert(),
            qbar: std::array::from_fn(|i| f(&self.qbar[i])),
            q_lift: std::array::from_fn(|i| f(&self.q_lift[i])),
            covol2: f(&self.covol2),
        }
    }
}

impl<T: Scalar> fmt::Debug for HilbPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HilbPoint(ell={:?}, qbar=({},{},{}), covol2={})",
            self.ell, self.qbar[0], self.qbar[1], self.qbar[2], self.covol2
        )
    }
}

/// Normalise `(l, q)` to its canonical point.
pub fn canonicalize<T: Scalar>(ell_raw: [T; 3], q: &QuadraticForm<T>) -> Result<HilbPoint<T>> {
    let [a, b, c] = ell_raw;
    let ell = LinearForm::from_raw(a, b, c)?;
    let quot = QuotientLattice::new(&ell);
    HilbPoint::from_form(&quot, q.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: [i64; 6]) -> QuadraticForm<i128> {
        QuadraticForm::from_i64(c).unwrap()
    }

    #[test]
    fn obstruction_and_span() {
        assert_eq!(canonicalize([1, 0, 0], &q([0, 0, 0, 2, 0, 0])), Err(Error::NonPrimitiveLambda2));
        assert_eq!(canonicalize([1, 0, 0], &q([1, 2, 3, 0, 0, 0])), Err(Error::QInSpan));
        assert_eq!(canonicalize([0, 0, 0], &q([1, 0, 0, 0, 0, 0])), Err(Error::ZeroLinearForm));
    }

    #[test]
    fn same_point_examples() {
        let base = canonicalize([1, 0, 0], &q([0, 0, 0, 1, 0, 0])).unwrap();
        assert_eq!(canonicalize([1, 0, 0], &q([0, 0, 1, 1, 0, 0])).unwrap(), base);
        assert_eq!(canonicalize([2, 0, 0], &q([0, 0, 0, 1, 0, 0])).unwrap(), base);
        assert_eq!(canonicalize([-1, 0, 0], &q([0, 0, 0, -1, 0, 0])).unwrap(), base);
        assert_eq!(*base.covol2_i2(), 1);
    }

    #[test]
    fn lift_is_in_the_coset() {
        let p = canonicalize([3, -5, 7], &q([4, -1, 0, 2, 9, -3])).unwrap();
        let again = canonicalize([3, -5, 7], &p.quadratic_form()).unwrap();
        assert_eq!(again, p);
    }
}
