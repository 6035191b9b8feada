// SPDX-License-Identifier: Apache-2.0

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Symmetric positive definite matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGram<T: Scalar> {
    dim: usize,
    entries: Vec<Ratio<T>>,
}

impl<T: Scalar> RationalGram<T> {
    pub fn new(dim: usize, entries: Vec<Ratio<T>>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::Dimension("gram matrix shape".into()));
        }
        let g = Self { dim, entries };
        for i in 0..dim {
            for j in 0..i {
                if g.get(i, j) != g.get(j, i) {
                    return Err(Error::Invalid("gram matrix is not symmetric".into()));
                }
            }
        }
        if !g.is_positive_definite() {
            return Err(Error::Invalid("gram matrix is not positive definite".into()));
        }
        Ok(g)
    }

    /// `form / denom` for an integer symmetric matrix.
    pub fn from_scaled(form: &[[T; 3]; 3], denom: &T) -> Result<Self> {
        let entries = form
            .iter()
            .flat_map(|r| r.iter().map(|x| Ratio::new(x.clone(), denom.clone())))
            .collect();
        Self::new(3, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Ratio<T> {
        &self.entries[i * self.dim + j]
    }

    /// Determinant by rational Gaussian elimination.
    pub fn det(&self) -> Ratio<T> {
        self.leading_minors().pop().unwrap_or_else(Ratio::one)
    }

    fn leading_minors(&self) -> Vec<Ratio<T>> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut acc = Ratio::one();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let p = a[k * n + k].clone();
            acc = acc * p.clone();
            out.push(acc.clone());
            if p.is_zero() {
                // Remaining minors are undefined for this elimination order.
                out.resize(n, Ratio::zero());
                return out;
            }
            for i in k + 1..n {
                let f = a[i * n + k].clone() / p.clone();
                for j in k..n {
                    let v = a[i * n + j].clone() - f.clone() * a[k * n + j].clone();
                    a[i * n + j] = v;
                }
            }
        }
        out
    }

    pub fn is_positive_definite(&self) -> bool {
        self.leading_minors().iter().all(|m| *m > Ratio::zero())
    }

    /// `x^T G x` for an integer vector.
    pub fn norm2(&self, x: &[T]) -> Ratio<T> {
        let mut acc = Ratio::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc = acc
                    + self.get(i, j).clone() * Ratio::from_integer(x[i].clone() * x[j].clone());
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_definiteness() {
        let form = [[2i64, 1, 0], [1, 2, 0], [0, 0, 3]];
        let g = RationalGram::from_scaled(&form, &3).unwrap();
        assert_eq!(g.det(), Ratio::new(9, 27));
        assert_eq!(g.norm2(&[1, -1, 0]), Ratio::new(2, 3));
        let bad = [[1i64, 2, 0], [2, 1, 0], [0, 0, 1]];
        assert!(RationalGram::from_scaled(&bad, &1).is_err());
    }
}
