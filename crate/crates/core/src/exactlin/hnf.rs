// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::exactlin::matrix::{combinations, det, IntMatrix};
use crate::scalar::{gcd_slice, Scalar};

/// Row-style Hermite normal form `h = u * m` with `u` unimodular.
#[derive(Clone, Debug)]
pub struct Hnf<T: Scalar> {
    pub h: IntMatrix<T>,
    pub u: IntMatrix<T>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Hermite normal form by left unimodular row operations.
///
/// The first `rank` rows of `h` are nonzero with strictly increasing pivot
/// columns, positive pivots, and entries above each pivot reduced into
/// `[0, pivot)`. The remaining rows are zero.
pub fn hnf_with_transform<T: Scalar>(m: &IntMatrix<T>) -> Hnf<T> {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        loop {
            let piv = (r..rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by_key(|&i| h.get(i, c).abs());
            let Some(p) = piv else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                h.sub_row_multiple(i, r, &q);
                u.sub_row_multiple(i, r, &q);
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    Hnf { h, u, rank: r, pivots }
}

/// The nonzero rows of the Hermite normal form; `Err` for the zero matrix.
pub fn hnf<T: Scalar>(m: &IntMatrix<T>) -> Result<IntMatrix<T>> {
    let res = hnf_with_transform(m);
    if res.rank == 0 {
        return Err(Error::ZeroMatrix);
    }
    let idx: Vec<usize> = (0..res.rank).collect();
    Ok(res.h.select_rows(&idx))
}

pub fn rank<T: Scalar>(m: &IntMatrix<T>) -> usize {
    hnf_with_transform(m).rank
}

/// Basis (as rows) of `{y in Z^n : m * y = 0}` for an `r x n` matrix `m`.
/// The result may have zero rows.
pub fn integer_kernel<T: Scalar>(m: &IntMatrix<T>) -> IntMatrix<T> {
    let res = hnf_with_transform(&m.transpose());
    let idx: Vec<usize> = (res.rank..m.cols()).collect();
    res.u.select_rows(&idx)
}

/// Squared covolume of the lattice spanned by the rows.
pub fn gram_det2<T: Scalar>(basis: &IntMatrix<T>) -> Result<T> {
    let d = det(&basis.gram())?;
    if d.is_positive() {
        Ok(d)
    } else {
        Err(Error::RankDeficient)
    }
}

/// Saturation of the row span inside the ambient `Z^n`, as an HNF basis.
pub fn saturate<T: Scalar>(generators: &IntMatrix<T>) -> Result<IntMatrix<T>> {
    if generators.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let perp = integer_kernel(generators);
    if perp.rows() == 0 {
        return Ok(IntMatrix::identity(generators.cols()));
    }
    let sat = integer_kernel(&perp);
    hnf(&sat)
}

/// gcd of all `n x n` minors of `columns` (rows are coordinates, columns are
/// generators). This is the index of the column span when it has full rank.
pub fn smith_minor_gcd<T: Scalar>(columns: &IntMatrix<T>, n: usize) -> Result<T> {
    if n == 0 || n > columns.rows() || n > columns.cols() {
        return Err(Error::NotFiniteIndex);
    }
    let mut g = T::zero();
    for rs in combinations(columns.rows(), n) {
        let sub = columns.select_rows(&rs);
        for cs in combinations(columns.cols(), n) {
            let d = det(&sub.select_cols(&cs))?;
            g = g.gcd(&d);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    if g.is_zero() {
        Err(Error::NotFiniteIndex)
    } else {
        Ok(g)
    }
}

/// True when the rows span a primitive (saturated) sublattice.
pub fn is_primitive<T: Scalar>(m: &IntMatrix<T>) -> bool {
    let r = rank(m);
    if r == 0 {
        return false;
    }
    let t = m.transpose();
    let mut g = T::zero();
    for rs in combinations(t.rows(), r) {
        let sub = t.select_rows(&rs);
        for cs in combinations(t.cols(), r) {
            g = g.gcd(&det(&sub.select_cols(&cs)).unwrap_or_else(|_| T::zero()));
            if g.is_one() {
                return true;
            }
        }
    }
    false
}

/// Content of a vector.
pub fn content<T: Scalar>(v: &[T]) -> T {
    gcd_slice(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> IntMatrix<i64> {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn hnf_shape() {
        let a = m(&[&[4, 6, 2], &[2, 3, 5], &[6, 9, 7]]);
        let res = hnf_with_transform(&a);
        assert_eq!(res.rank, 2);
        assert_eq!(res.u.mul(&a).unwrap(), res.h);
        assert_eq!(det(&res.u).unwrap().abs(), 1);
        assert_eq!(res.h.row(0), &[2, 3, 5]);
        assert_eq!(res.h.row(1), &[0, 0, 8]);
        assert_eq!(res.h.row(2), &[0, 0, 0]);
    }

    #[test]
    fn gram_det2_examples() {
        assert_eq!(gram_det2(&m(&[&[1, 0, 0], &[0, 1, 0]])).unwrap(), 1);
        assert_eq!(gram_det2(&m(&[&[3, 4]])).unwrap(), 25);
        let prod = m(&[
            &[1, 1, 1, 0, 0, 0],
            &[0, 1, 0, 1, 1, 0],
            &[0, 0, 1, 0, 1, 1],
        ]);
        assert_eq!(gram_det2(&prod).unwrap(), 20);
        assert_eq!(gram_det2(&m(&[&[1, 2], &[2, 4]])), Err(Error::RankDeficient));
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(saturate(&m(&[&[2, 0]])).unwrap(), m(&[&[1, 0]]));
        let e = m(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(saturate(&e).unwrap(), e);
        assert_eq!(saturate(&m(&[&[0, 0]])), Err(Error::ZeroMatrix));
        let sat = saturate(&m(&[&[2, 2, 0], &[0, 2, 2]])).unwrap();
        assert_eq!(sat, m(&[&[1, 0, -1], &[0, 1, 1]]));
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = m(&[&[2, 1, 0], &[0, 3, 5]]);
        let k = integer_kernel(&a);
        assert_eq!(k.rows(), 1);
        assert!(a.mul(&k.transpose()).unwrap().is_zero());
        assert_eq!(content(k.row(0)), 1);
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_minor_gcd(&m(&[&[1, 0], &[0, 1]]), 2).unwrap(), 1);
        assert_eq!(smith_minor_gcd(&m(&[&[2, 0], &[0, 2]]), 2).unwrap(), 4);
        // (2, sqrt 8) in Z[sqrt 8]: generators 2, 2*sqrt8, sqrt8, 8 on basis {1, sqrt8}.
        let ideal = m(&[&[2, 0, 0, 8], &[0, 2, 1, 0]]);
        assert_eq!(smith_minor_gcd(&ideal, 2).unwrap(), 2);
        assert_eq!(
            smith_minor_gcd(&m(&[&[1, 2], &[2, 4]]), 2),
            Err(Error::NotFiniteIndex)
        );
    }

    #[test]
    fn bigint_saturation() {
        let g = IntMatrix::<BigInt>::from_i64_rows(&[[6, 0, 0], [0, 10, 15]]).unwrap();
        let s = saturate(&g).unwrap();
        assert_eq!(s, IntMatrix::from_i64_rows(&[[1, 0, 0], [0, 2, 3]]).unwrap());
        assert!(is_primitive(&s));
        assert!(!is_primitive(&g));
    }
}
