// SPDX-License-Identifier: Apache-2.0

use num_rational::Ratio;

use crate::exactlin::{
    adjugate3, det3, dot, hnf, hnf_with_transform, integer_kernel, IntMatrix, RationalGram,
};
use crate::lattice::form::{product_lattice, LinearForm};
use crate::scalar::Scalar;

/// The rank-3 quotient `S(2) / (S(1) * l)` with the inner product of the
/// orthogonal complement.
///
/// Cosets are addressed by `qbar = K q`, where the rows of `K` are the HNF
/// basis of the integer vectors orthogonal to `S(1) * l`. With this choice
/// the Gram matrix of the coset basis is `(K K^T)^{-1}`, which we store as
/// the integer matrix `form = adj(K K^T)` together with the denominator
/// `P = det(K K^T)`, the squared covolume of `S(1) * l`.
#[derive(Clone, Debug)]
pub struct QuotientLattice<T: Scalar> {
    source: LinearForm<T>,
    product: IntMatrix<T>,
    product_covol2: T,
    product_adj: [[T; 3]; 3],
    kernel: [[T; 6]; 3],
    form: [[T; 3]; 3],
    lift_basis: [[T; 6]; 3],
}

fn to_arr6<T: Scalar>(row: &[T]) -> [T; 6] {
    std::array::from_fn(|i| row[i].clone())
}

fn gram3<T: Scalar>(m: &IntMatrix<T>) -> [[T; 3]; 3] {
    let g = m.gram();
    std::array::from_fn(|i| std::array::from_fn(|j| g.get(i, j).clone()))
}

/// `floor(n / d + 1/2)` for `d > 0`.
pub(crate) fn round_div<T: Scalar>(n: &T, d: &T) -> T {
    let two = T::from_i64_exact(2);
    (two.clone() * n.clone() + d.clone()).div_floor(&(two * d.clone()))
}

impl<T: Scalar> QuotientLattice<T> {
    pub fn new(l: &LinearForm<T>) -> Self {
        let product = product_lattice(l);
        let p = product.covol2().clone();
        let a = product.basis().clone();
        let product_adj = adjugate3(&gram3(&a));

        let k = hnf(&integer_kernel(&a)).expect("orthogonal complement has rank 3");
        assert_eq!(k.rows(), 3);
        let kk = gram3(&k);
        assert_eq!(det3(&kk), p, "complement covolume must match the product lattice");
        let form = adjugate3(&kk);

        let t = hnf_with_transform(&k.transpose());
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { T::one() } else { T::zero() };
                assert_eq!(*t.h.get(i, j), want, "complement basis is not primitive");
            }
        }
        let kernel: [[T; 6]; 3] = std::array::from_fn(|i| to_arr6(k.row(i)));
        let mut q = Self {
            source: l.clone(),
            product: a,
            product_covol2: p,
            product_adj,
            kernel,
            form,
            lift_basis: std::array::from_fn(|_| std::array::from_fn(|_| T::zero())),
        };
        q.lift_basis = std::array::from_fn(|i| q.reduce(&to_arr6(t.u.row(i))));
        q
    }

    pub fn source(&self) -> &LinearForm<T> {
        &self.source
    }

    /// Squared covolume of `S(1) * l`.
    pub fn product_covol2(&self) -> &T {
        &self.product_covol2
    }

    /// Squared covolume of the quotient, `1 / P`.
    pub fn covol2(&self) -> Ratio<T> {
        Ratio::new(T::one(), self.product_covol2.clone())
    }

    /// Integer form with `x^T form x = P * |x|^2`.
    pub fn form(&self) -> &[[T; 3]; 3] {
        &self.form
    }

    pub fn gram(&self) -> RationalGram<T> {
        RationalGram::from_scaled(&self.form, &self.product_covol2).expect("positive definite")
    }

    pub fn kernel(&self) -> &[[T; 6]; 3] {
        &self.kernel
    }

    pub fn lift_basis(&self) -> &[[T; 6]; 3] {
        &self.lift_basis
    }

    pub fn lift_basis_matrix(&self) -> IntMatrix<T> {
        IntMatrix::from_rows(&self.lift_basis).expect("3x6")
    }

    pub fn product_basis(&self) -> &IntMatrix<T> {
        &self.product
    }

    /// Coordinates of the coset `q + S(1) * l` in the lift basis.
    pub fn coset_coords(&self, q: &[T; 6]) -> [T; 3] {
        std::array::from_fn(|i| dot(&self.kernel[i], q))
    }

    /// `P * |x|^2` for coset coordinates `x`.
    pub fn scaled_norm2(&self, x: &[T; 3]) -> T {
        crate::lattice::ellipsoid::form_value(&self.form, x)
    }

    pub fn norm2(&self, x: &[T; 3]) -> Ratio<T> {
        Ratio::new(self.scaled_norm2(x), self.product_covol2.clone())
    }

    /// Nearest-plane style reduction of `q` modulo `S(1) * l`: subtract the
    /// rounded least-squares combination of `X_i l`.
    pub fn reduce(&self, q: &[T; 6]) -> [T; 6] {
        let z: [T; 3] = std::array::from_fn(|i| dot(self.product.row(i), q));
        let mut out = q.clone();
        for i in 0..3 {
            let num = dot(&self.product_adj[i], &z);
            let g = round_div(&num, &self.product_covol2);
            if g.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = o.clone() - g.clone() * self.product.get(i, j).clone();
            }
        }
        out
    }

    /// A short representative in `Z^6` of the coset with coordinates `x`.
    pub fn lift(&self, x: &[T; 3]) -> [T; 6] {
        let raw: [T; 6] = std::array::from_fn(|j| {
            (0..3).fold(T::zero(), |acc, i| acc + x[i].clone() * self.lift_basis[i][j].clone())
        });
        self.reduce(&raw)
    }

    /// Exact squared distance from `x` to the real span of `S(1) * l`.
    pub fn dist2_to_span(&self, x: &[T; 6]) -> Ratio<T> {
        let z: [T; 3] = std::array::from_fn(|i| dot(self.product.row(i), x));
        let proj = (0..3).fold(T::zero(), |acc, i| {
            acc + z[i].clone() * dot(&self.product_adj[i], &z)
        });
        let total = self.product_covol2.clone() * dot(x, x) - proj;
        Ratio::new(total, self.product_covol2.clone())
    }
}

/// Squared distance from `x` to the span of `X0 l, X1 l, X2 l`.
pub fn dist_to_v<T: Scalar>(x: &[T; 6], l: &LinearForm<T>) -> Ratio<T> {
    let a = l.product_basis();
    let p = product_lattice(l).covol2().clone();
    let adj = adjugate3(&gram3(&a));
    let z: [T; 3] = std::array::from_fn(|i| dot(a.row(i), x));
    let proj = (0..3).fold(T::zero(), |acc, i| acc + z[i].clone() * dot(&adj[i], &z));
    Ratio::new(p.clone() * dot(x, x) - proj, p)
}

pub fn quotient<T: Scalar>(l: &LinearForm<T>) -> QuotientLattice<T> {
    QuotientLattice::new(l)
}
