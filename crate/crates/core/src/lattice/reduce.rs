// SPDX-License-Identifier: Apache-2.0

use crate::scalar::Scalar;

pub type Basis<T> = [[T; 3]; 3];

/// `B G B^T`
pub fn congruent<T: Scalar>(g: &Basis<T>, b: &Basis<T>) -> Basis<T> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = T::zero();
            for k in 0..3 {
                for l in 0..3 {
                    acc = acc + b[i][k].clone() * g[k][l].clone() * b[j][l].clone();
                }
            }
            acc
        })
    })
}

/// A unimodular basis (rows, in the original coordinates) that is pairwise
/// size-reduced for the Gram matrix `g`, together with its Gram matrix.
///
/// A step `b_j -= k b_i` is only taken when it strictly shortens `b_j`, so
/// the loop terminates.
pub fn size_reduce<T: Scalar>(g: &Basis<T>) -> (Basis<T>, Basis<T>) {
    let one = T::one;
    let zero = T::zero;
    let mut b: Basis<T> = [[one(), zero(), zero()], [zero(), one(), zero()], [zero(), zero(), one()]];
    let two = T::from_i64_exact(2);
    loop {
        let cur = congruent(g, &b);
        let step = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && two.clone() * cur[i][j].abs() > cur[i][i]);
        let Some((i, j)) = step else {
            return (b, cur);
        };
        let k = (two.clone() * cur[i][j].clone() + cur[i][i].clone()).div_floor(&(two.clone() * cur[i][i].clone()));
        let bi = b[i].clone();
        for (x, y) in b[j].iter_mut().zip(bi) {
            *x = x.clone() - k.clone() * y;
        }
    }
}

/// `sum_i y_i b_i`
pub fn combine<T: Scalar>(y: &[T; 3], b: &Basis<T>) -> [T; 3] {
    std::array::from_fn(|j| {
        (0..3).fold(T::zero(), |acc, i| acc + y[i].clone() * b[i][j].clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::det3;

    #[test]
    fn reduces_skewed_form() {
        let g = [[1i128, 100, 0], [100, 10001, 0], [0, 0, 5]];
        let (b, r) = size_reduce(&g);
        assert_eq!(det3(&b).abs(), 1);
        assert_eq!(r, [[1, 0, 0], [0, 1, 0], [0, 0, 5]]);
        assert_eq!(congruent(&g, &b), r);
    }

    #[test]
    fn tie_does_not_cycle() {
        let g = [[2i64, 1, 1], [1, 2, 1], [1, 1, 2]];
        let (_, r) = size_reduce(&g);
        assert_eq!(r, g);
    }
}
